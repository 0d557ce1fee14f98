#pragma once

#include <string>

namespace fermatiq {

/// Integral-basis convention for O_K = Z[theta], K = Q(sqrt(-d)).
/// theta = sqrt(-d) when d = 1,2 (mod 4); theta = (1+sqrt(-d))/2 when
/// d = 3 (mod 4). Either way theta satisfies a monic quadratic
/// theta^2 = s*theta + t with integer s, t.
enum class ThetaKind {
    SqrtMinusD,         // theta^2 = -d
    HalfOnePlusSqrtMinusD  // theta^2 = theta - (1+d)/4
};

/// One of the nine imaginary quadratic fields of class number one.
/// Instances are canonical and immutable: make_field(d) hands out a
/// reference into a static table, so descriptor identity can be tested
/// by address.
class Field {
public:
    int d() const noexcept { return d_; }
    ThetaKind theta_kind() const noexcept { return kind_; }
    long discriminant() const noexcept { return disc_; }
    int unit_count() const noexcept { return unit_count_; }

    /// theta^2 = theta_lin()*theta + theta_const().
    long theta_lin() const noexcept { return kind_ == ThetaKind::SqrtMinusD ? 0 : 1; }
    long theta_const() const noexcept {
        return kind_ == ThetaKind::SqrtMinusD ? -static_cast<long>(d_) : -(1 + static_cast<long>(d_)) / 4;
    }

    /// True for d in {3,11,19,43,67,163}: the fields where (2) is prime
    /// with residue field F_4.
    bool two_is_inert() const noexcept;

    std::string name() const;  // "Q(sqrt(-d))"

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

private:
    Field(int d, ThetaKind kind, long disc, int units) noexcept
        : d_(d), kind_(kind), disc_(disc), unit_count_(units) {}
    friend const Field& make_field(int d);

    int d_;
    ThetaKind kind_;
    long disc_;
    int unit_count_;
};

/// Returns the descriptor for Q(sqrt(-d)).
/// Throws std::invalid_argument unless d is one of 1, 2, 3, 7, 11, 19,
/// 43, 67, 163 (the only imaginary quadratic fields of class number one;
/// nothing here applies elsewhere).
const Field& make_field(int d);

/// The nine admissible d values, ascending.
const int* all_field_ds(int& count) noexcept;

}  // namespace fermatiq

#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "fermatiq/field.hpp"

namespace fermatiq {

/// An element x + y*theta of O_K in exact integer coordinates.
/// Immutable value type; all arithmetic is exact (GMP integers).
class OkElement {
public:
    OkElement(const Field& field, mpz_class x, mpz_class y)
        : x_(std::move(x)), y_(std::move(y)), field_(&field) {}

    static OkElement integer(const Field& field, mpz_class n) {
        return OkElement(field, std::move(n), 0);
    }
    static OkElement zero(const Field& field) { return integer(field, 0); }
    static OkElement one(const Field& field) { return integer(field, 1); }
    static OkElement theta(const Field& field) { return OkElement(field, 0, 1); }
    /// sqrt(-d) itself: theta when d = 1,2 (mod 4), 2*theta - 1 otherwise.
    static OkElement sqrt_minus_d(const Field& field) {
        if (field.theta_kind() == ThetaKind::SqrtMinusD) return theta(field);
        return OkElement(field, -1, 2);
    }

    const mpz_class& x() const noexcept { return x_; }
    const mpz_class& y() const noexcept { return y_; }
    const Field& field() const noexcept { return *field_; }

    bool is_zero() const noexcept { return x_ == 0 && y_ == 0; }

    /// |e|^2 as a rational integer; nonnegative, multiplicative, and zero
    /// only at zero. For theta = (1+sqrt(-d))/2 this is x^2 + xy + y^2(1+d)/4.
    mpz_class norm() const;
    mpz_class trace() const;
    OkElement conj() const;

    bool is_unit() const { return norm() == 1; }

    OkElement operator-() const { return OkElement(*field_, -x_, -y_); }
    OkElement operator+(const OkElement& rhs) const;
    OkElement operator-(const OkElement& rhs) const;
    OkElement operator*(const OkElement& rhs) const;
    OkElement operator*(const mpz_class& n) const { return OkElement(*field_, x_ * n, y_ * n); }

    bool operator==(const OkElement& rhs) const {
        return field_ == rhs.field_ && x_ == rhs.x_ && y_ == rhs.y_;
    }
    bool operator!=(const OkElement& rhs) const { return !(*this == rhs); }

    OkElement pow(unsigned long e) const;

    /// Exact division: returns this/den when den | this in O_K, nullopt
    /// otherwise. Throws std::domain_error on division by zero.
    std::optional<OkElement> divide_exact(const OkElement& den) const;

    /// True when this divides e in O_K.
    bool divides(const OkElement& e) const;

    /// "x", "x+y*theta", "-theta", ... (exact, parseable form)
    std::string str() const;

private:
    void require_same_field(const OkElement& rhs) const;

    mpz_class x_, y_;
    const Field* field_;
};

/// The full unit group of O_K: {1,-1}, {1,-1,i,-i} for d=1, and the six
/// sixth roots of unity for d=3 (omega = theta - 1 there).
std::vector<OkElement> units(const Field& field);

/// Parses the coordinate form produced by OkElement::str(), plus the
/// compact "x,y" pair form used by the CLI.
OkElement parse_ok_element(const Field& field, const std::string& text);

}  // namespace fermatiq

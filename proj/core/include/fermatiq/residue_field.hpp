#pragma once

#include <cstdint>

#include "fermatiq/prime_ideal.hpp"

namespace fermatiq {

/// The residue field O_K/P, either F_l (split/ramified) or F_{l^2}
/// (inert). Elements are pairs (u, v) meaning u + v*t where t is the
/// image of theta; v is always 0 in the degree-one case. In degree two
/// t satisfies the reduction mod l of theta's minimal polynomial,
/// t^2 = s*t + c.
class ResidueField {
public:
    struct Elt {
        std::int64_t u = 0, v = 0;
        bool operator==(const Elt&) const = default;
    };

    explicit ResidueField(const PrimeIdeal& P);

    std::int64_t l() const noexcept { return l_; }
    int degree() const noexcept { return degree_; }
    std::int64_t size() const noexcept { return q_; }
    /// Image of theta: (t0, 0) in degree one, (0, 1) in degree two.
    Elt theta_image() const noexcept {
        return degree_ == 1 ? Elt{t0_, 0} : Elt{0, 1};
    }

    /// residue_map: the image of e in O_K/P.
    Elt reduce(const OkElement& e) const;

    Elt zero() const noexcept { return {0, 0}; }
    Elt one() const noexcept { return {1, 0}; }
    bool is_zero(Elt a) const noexcept { return a.u == 0 && a.v == 0; }

    Elt add(Elt a, Elt b) const noexcept { return {mod(a.u + b.u), mod(a.v + b.v)}; }
    Elt sub(Elt a, Elt b) const noexcept { return {mod(a.u - b.u), mod(a.v - b.v)}; }
    Elt neg(Elt a) const noexcept { return {mod(-a.u), mod(-a.v)}; }
    Elt mul(Elt a, Elt b) const noexcept;
    Elt pow(Elt a, std::int64_t e) const;

    /// Quadratic character: 0 at zero, +1 on nonzero squares, -1 otherwise.
    int chi(Elt a) const;

    /// Enumeration: element(i) for i in [0, size()).
    Elt element(std::int64_t i) const noexcept {
        return degree_ == 1 ? Elt{i, 0} : Elt{i % l_, i / l_};
    }

private:
    std::int64_t mod(std::int64_t a) const noexcept {
        std::int64_t r = a % l_;
        return r < 0 ? r + l_ : r;
    }

    std::int64_t l_;
    int degree_;
    std::int64_t q_;
    const Field* field_ = nullptr;
    std::int64_t t0_ = 0;       // degree 1: image of theta
    std::int64_t s_ = 0, c_ = 0;  // degree 2: t^2 = s*t + c
};

/// Convenience wrapper: the image of e in O_K/P.
inline ResidueField::Elt residue_map(const OkElement& e, const PrimeIdeal& P) {
    return ResidueField(P).reduce(e);
}

}  // namespace fermatiq

#pragma once

#include <cstdint>
#include <vector>

#include "fermatiq/prime_ideal.hpp"

namespace fermatiq {

/// The finite ring O_K/(beta) for beta != 0, with residues enumerated
/// through a Hermite-normal-form basis of the ideal lattice: every class
/// has a unique representative u + v*theta with 0 <= u < n1, 0 <= v < k,
/// where n1*k = |N(beta)|.
class QuotientRing {
public:
    explicit QuotientRing(OkElement modulus);

    const OkElement& modulus() const noexcept { return modulus_; }
    mpz_class size() const { return n1_ * k_; }

    OkElement reduce(const OkElement& e) const;
    OkElement mul(const OkElement& a, const OkElement& b) const { return reduce(a * b); }
    OkElement pow(const OkElement& base, const mpz_class& e) const;

    /// All canonical residues, (v-major, u-minor) order.
    std::vector<OkElement> residues() const;

private:
    OkElement modulus_;
    mpz_class n1_;  // additive order of 1 in the quotient: (beta) cap Z = (n1)
    mpz_class k_;   // gcd of theta-coordinates in the lattice
    mpz_class m_;   // off-diagonal entry: (m, k) is a lattice vector
};

/// The unit group of O_K/P^n, enumerated by brute force with the group
/// structure (invariant factors, ascending) extracted from element
/// orders. Guarded at modulus norm > 10^6.
struct QuotientUnitGroup {
    PrimeIdeal prime;
    int exponent;
    std::vector<OkElement> elements;
    std::vector<std::int64_t> structure;

    std::size_t order() const noexcept { return elements.size(); }
};

QuotientUnitGroup quotient_unit_group(const PrimeIdeal& P, int n);

}  // namespace fermatiq

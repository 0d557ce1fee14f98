#pragma once

#include <random>

#include "fermatiq/frey_curve.hpp"
#include "fermatiq/residue_field.hpp"

namespace fermatiq::testing {

inline OkElement random_element(const Field& f, std::mt19937_64& rng, long box = 9) {
    std::uniform_int_distribution<long> coord(-box, box);
    while (true) {
        OkElement e(f, coord(rng), coord(rng));
        if (!e.is_zero()) return e;
    }
}

inline bool pairwise_coprime(const OkElement& a, const OkElement& b, const OkElement& c) {
    return coprime(a, b) && coprime(a, c) && coprime(b, c);
}

/// Random pairwise coprime triple; when force_even_abc is set, ensures
/// some prime above 2 divides the product (multiplying a by 2 keeps the
/// triple coprime because b and c are then chosen odd).
inline std::array<OkElement, 3> random_coprime_triple(const Field& f, std::mt19937_64& rng,
                                                      bool force_even_abc) {
    while (true) {
        OkElement a = random_element(f, rng), b = random_element(f, rng),
                  c = random_element(f, rng);
        if (!pairwise_coprime(a, b, c)) continue;
        if (!force_even_abc) return {a, b, c};
        bool abc_even = mpz_even_p(mpz_class(a.norm() * b.norm() * c.norm()).get_mpz_t()) != 0;
        if (abc_even) return {a, b, c};
        if (mpz_even_p(b.norm().get_mpz_t()) == 0 && mpz_even_p(c.norm().get_mpz_t()) == 0) {
            OkElement a2 = a * mpz_class(2);
            if (pairwise_coprime(a2, b, c)) return {a2, b, c};
        }
    }
}

/// Independent oracle: full (x, y) enumeration of affine points plus the
/// point at infinity.
inline std::int64_t brute_force_point_count(const FreyCurve& E, const PrimeIdeal& P) {
    ResidueField F(P);
    auto A = F.reduce(E.A), B = F.reduce(E.B);
    std::int64_t count = 1;
    for (std::int64_t i = 0; i < F.size(); ++i) {
        auto x = F.element(i);
        auto rhs = F.mul(F.mul(x, F.sub(x, A)), F.add(x, B));
        for (std::int64_t j = 0; j < F.size(); ++j) {
            auto y = F.element(j);
            if (F.mul(y, y) == rhs) ++count;
        }
    }
    return count;
}

}  // namespace fermatiq::testing

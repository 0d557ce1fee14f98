#include "fermatiq/cm_units.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "fermatiq/factor.hpp"

namespace fermatiq {

std::vector<UnitSolution> unit_search(const Field& field, std::int64_t p_max) {
    if (p_max < 5) throw std::invalid_argument("unit_search: p_max must be at least 5");
    std::vector<UnitSolution> out;
    const auto us = units(field);
    for (std::int64_t p = 5; p <= p_max; ++p) {
        if (!is_prime(p)) continue;
        std::vector<OkElement> powers;
        powers.reserve(us.size());
        for (const auto& u : us) powers.push_back(u.pow(static_cast<unsigned long>(p)));
        for (std::size_t i = 0; i < us.size(); ++i) {
            for (std::size_t j = 0; j < us.size(); ++j) {
                for (std::size_t k = 0; k < us.size(); ++k) {
                    if (!(powers[i] + powers[j] + powers[k]).is_zero()) continue;
                    bool sum0 = (us[i] + us[j] + us[k]).is_zero();
                    out.push_back(UnitSolution{us[i], us[j], us[k], p, sum0});
                }
            }
        }
    }
    return out;
}

TripleClass classify_trivial(const OkElement& a, const OkElement& b, const OkElement& c,
                             std::int64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("classify_trivial: exponent must be prime");
    const auto up = static_cast<unsigned long>(p);
    if (!(a.pow(up) + b.pow(up) + c.pow(up)).is_zero()) {
        throw std::invalid_argument("classify_trivial: not a solution for exponent " +
                                    std::to_string(p));
    }
    if (a.is_zero() || b.is_zero() || c.is_zero()) return TripleClass::ZeroEntry;
    if (!(a + b + c).is_zero()) return TripleClass::Nontrivial;

    // A nonzero sum-zero solution must be a scalar multiple of a
    // permutation of (1, omega, omega^2); verify by checking the ratio
    // multiset {b/a, c/a} = {omega, omega^2}.
    const Field& f = a.field();
    if (f.d() != 3) {
        throw std::logic_error("classify_trivial: sum-zero solution outside Q(sqrt(-3))");
    }
    OkElement omega(f, -1, 1);
    OkElement omega2 = omega * omega;
    auto r1 = b.divide_exact(a), r2 = c.divide_exact(a);
    bool structured = r1 && r2 &&
                      ((*r1 == omega && *r2 == omega2) || (*r1 == omega2 && *r2 == omega));
    if (!structured) {
        throw std::logic_error("classify_trivial: sum-zero solution is not a scalar multiple of "
                               "(1, omega, omega^2)");
    }
    return TripleClass::SumZero;
}

std::vector<std::array<OkElement, 3>> permutation_classes(const std::vector<UnitSolution>& sols) {
    auto key = [](const OkElement& e) { return e.x().get_str() + "|" + e.y().get_str(); };
    std::set<std::string> seen;
    std::vector<std::array<OkElement, 3>> out;
    for (const auto& s : sols) {
        std::array<std::string, 3> ks = {key(s.a), key(s.b), key(s.c)};
        std::sort(ks.begin(), ks.end());
        std::string composite = std::to_string(s.p) + "#" + ks[0] + "#" + ks[1] + "#" + ks[2];
        if (seen.insert(composite).second) out.push_back({s.a, s.b, s.c});
    }
    return out;
}

}  // namespace fermatiq

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "fermatiq/ok_element.hpp"

namespace fermatiq {

enum class TripleClass { ZeroEntry, SumZero, Nontrivial };

/// A unit triple solving a^p + b^p + c^p = 0 exactly.
struct UnitSolution {
    OkElement a, b, c;
    std::int64_t p;
    bool trivial_sum;  // a + b + c = 0
};

/// Exhaustive search over all unit triples for every prime 5 <= p <=
/// p_max. Raw ordered triples; deduplicate with permutation_classes.
/// Requires p_max >= 5.
std::vector<UnitSolution> unit_search(const Field& field, std::int64_t p_max);

/// Classifies a triple that solves the Fermat equation for exponent p.
/// Throws std::invalid_argument when the relation does not hold. A
/// SumZero verdict additionally verifies the triple is a scalar multiple
/// of a permutation of (1, omega, omega^2).
TripleClass classify_trivial(const OkElement& a, const OkElement& b, const OkElement& c,
                             std::int64_t p);

/// Canonicalizes solutions by unordered triple, dropping permutation
/// duplicates (the multiset of entries is the class key).
std::vector<std::array<OkElement, 3>> permutation_classes(const std::vector<UnitSolution>& sols);

}  // namespace fermatiq

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fermatiq/quotient_ring.hpp"

namespace fermatiq {

/// Result of the unit-scaling computation at b = q^3, q the inert prime
/// above 2: the image of Phi : O_K^* -> (O_K/b)^*/squares and its
/// cokernel, with a complete set of canonically lifted coset
/// representatives.
struct CokernelReport {
    int d = 0;
    std::vector<std::int64_t> unit_group_structure;  // of (O_K/q^3)^*, e.g. (2,2,12)
    std::int64_t unit_group_order = 0;               // 48
    std::int64_t squares_order = 0;                  // 6
    std::int64_t image_order = 0;                    // |Phi(O_K^*)| inside the square-free quotient
    std::vector<std::int64_t> cokernel_structure;    // (2,2)
    std::vector<OkElement> representatives;          // one canonical lift per coset

    std::int64_t cokernel_order() const noexcept {
        return static_cast<std::int64_t>(representatives.size());
    }
};

/// Computes the full report for one of the six fields where 2 is inert.
/// Throws std::domain_error otherwise.
CokernelReport cokernel_phi(const Field& field);

/// Checks that the supplied elements are units mod q^3 lying in pairwise
/// distinct cosets of squares*Phi(O_K^*), and that they cover every
/// coset. On failure, *diagnostic (if given) explains which pair or
/// count failed.
bool verify_cokernel_representatives(const Field& field, const std::vector<OkElement>& reps,
                                     std::string* diagnostic = nullptr);

}  // namespace fermatiq

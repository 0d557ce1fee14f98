#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "fermatiq/ok_element.hpp"

namespace fermatiq {

/// Unit-scaling data for the six fields where 2 is inert: a complete set
/// of cokernel representatives (theta coordinates) and the resulting
/// bound on v_q of the conductor.
struct Table1Row {
    int d;
    std::array<std::pair<long, long>, 4> representatives;
    int conductor_valuation;  // 4 in every row
};

const std::vector<Table1Row>& table1();
std::vector<OkElement> table1_representatives(const Field& field);

/// Primes showing up as torsion in the abelianized congruence subgroup
/// at level q^4, per field; these block the lifting argument and force
/// the exponent floor up.
struct Table2Row {
    int d;
    std::vector<std::int64_t> torsion_primes;
};

const std::vector<Table2Row>& table2();
std::vector<std::int64_t> table2_torsion(const Field& field);

/// exponent_floor applied to the embedded torsion data: 19 for d = 163,
/// 17 for the other five.
std::int64_t default_exponent_floor(const Field& field);

}  // namespace fermatiq

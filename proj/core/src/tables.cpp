#include "fermatiq/tables.hpp"

#include <stdexcept>

#include "fermatiq/sieve.hpp"

namespace fermatiq {

const std::vector<Table1Row>& table1() {
    // Representatives written in theta coordinates; rows originally given
    // in terms of sqrt(-d) convert via sqrt(-d) = 2*theta - 1.
    static const std::vector<Table1Row> rows = {
        {3, {{{1, 0}, {-2, 3}, {1, 4}, {2, -1}}}, 4},
        {11, {{{1, 0}, {-1, 1}, {-3, 4}, {-1, -3}}}, 4},
        {19, {{{1, 0}, {-1, 3}, {1, 4}, {3, 3}}}, 4},
        {43, {{{1, 0}, {-3, -1}, {-3, 4}, {-3, 3}}}, 4},
        {67, {{{1, 0}, {-1, 3}, {-1, 4}, {-3, -3}}}, 4},
        {163, {{{1, 0}, {-1, 3}, {-1, 4}, {-3, -3}}}, 4},
    };
    return rows;
}

std::vector<OkElement> table1_representatives(const Field& field) {
    for (const auto& row : table1()) {
        if (row.d != field.d()) continue;
        std::vector<OkElement> out;
        for (auto [x, y] : row.representatives) out.emplace_back(field, x, y);
        return out;
    }
    throw std::domain_error("table1: no row for " + field.name() + " (2 is not inert there)");
}

const std::vector<Table2Row>& table2() {
    static const std::vector<Table2Row> rows = {
        {3, {2, 3}}, {11, {2, 3}}, {19, {2, 3}},
        {43, {2, 3}}, {67, {2, 3}}, {163, {2, 3, 5, 11, 17}},
    };
    return rows;
}

std::vector<std::int64_t> table2_torsion(const Field& field) {
    for (const auto& row : table2()) {
        if (row.d == field.d()) return row.torsion_primes;
    }
    throw std::domain_error("table2: no row for " + field.name());
}

std::int64_t default_exponent_floor(const Field& field) {
    return exponent_floor(field, table2_torsion(field));
}

}  // namespace fermatiq

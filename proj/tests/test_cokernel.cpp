#include <doctest.h>

#include "fermatiq/cokernel.hpp"
#include "fermatiq/tables.hpp"

using namespace fermatiq;

TEST_CASE("cokernel of Phi across the six fields") {
    for (int d : {3, 11, 19, 43, 67, 163}) {
        CAPTURE(d);
        CokernelReport report = cokernel_phi(make_field(d));
        CHECK(report.unit_group_order == 48);
        CHECK(report.unit_group_structure == std::vector<std::int64_t>{2, 2, 12});
        CHECK(report.squares_order == 6);
        // (O_K/q^3)^*/squares is (Z/2)^3 of order 8
        CHECK(report.unit_group_order / report.squares_order == 8);
        CHECK(report.image_order == 2);
        CHECK(report.cokernel_order() == 4);
        CHECK(report.cokernel_structure == std::vector<std::int64_t>{2, 2});
        // image * cokernel * squares = whole unit group
        CHECK(report.image_order * report.cokernel_order() * report.squares_order ==
              report.unit_group_order);
        // the computed representatives themselves verify
        CHECK(verify_cokernel_representatives(make_field(d), report.representatives));
        // 1 lies in the trivial coset and is its canonical representative
        CHECK(report.representatives[0] == OkElement::one(make_field(d)));
    }
}

TEST_CASE("embedded representative rows verify") {
    for (const auto& row : table1()) {
        CAPTURE(row.d);
        const Field& f = make_field(row.d);
        std::string diag;
        CHECK(verify_cokernel_representatives(f, table1_representatives(f), &diag));
        CHECK(diag.empty());
        CHECK(row.conductor_valuation == 4);
    }
}

TEST_CASE("verification catches defective representative lists") {
    const Field& f = make_field(11);
    auto reps = table1_representatives(f);
    std::string diag;

    auto duplicated = reps;
    duplicated[2] = duplicated[1];
    CHECK(!verify_cokernel_representatives(f, duplicated, &diag));
    CHECK(!diag.empty());

    auto incomplete = std::vector<OkElement>(reps.begin(), reps.begin() + 3);
    CHECK(!verify_cokernel_representatives(f, incomplete, &diag));

    auto with_even = reps;
    with_even[3] = OkElement::integer(f, 2);  // not a unit mod q^3
    CHECK(!verify_cokernel_representatives(f, with_even, &diag));

    // unit-multiplied representatives still verify (same cosets)
    auto negated = reps;
    for (auto& r : negated) r = -r;
    CHECK(verify_cokernel_representatives(f, negated, nullptr));
}

TEST_CASE("cokernel is only defined when 2 is inert") {
    CHECK_THROWS_AS(cokernel_phi(make_field(7)), std::domain_error);
    CHECK_THROWS_AS(cokernel_phi(make_field(1)), std::domain_error);
    CHECK_THROWS_AS(table1_representatives(make_field(7)), std::domain_error);
}

TEST_CASE("table2 rows cover exactly the six inert-2 fields") {
    CHECK(table2().size() == 6);
    for (const auto& row : table2()) {
        CHECK(make_field(row.d).two_is_inert());
        // 2 and 3 always show up as torsion
        CHECK(row.torsion_primes[0] == 2);
        CHECK(row.torsion_primes[1] == 3);
    }
    CHECK(table2_torsion(make_field(163)) == std::vector<std::int64_t>{2, 3, 5, 11, 17});
}

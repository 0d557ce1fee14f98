#include <doctest.h>

#include "fermatiq/quotient_ring.hpp"

using namespace fermatiq;

TEST_CASE("quotient ring by q^3 has 64 residues") {
    const Field& f = make_field(11);
    QuotientRing ring(OkElement::integer(f, 8));
    CHECK(ring.size() == 64);
    CHECK(ring.residues().size() == 64);
    CHECK(ring.reduce(OkElement::integer(f, 8)).is_zero());
    CHECK(ring.reduce(OkElement(f, 0, 8)).is_zero());
    CHECK(ring.reduce(OkElement::integer(f, 9)) == OkElement::one(f));
    CHECK(ring.reduce(OkElement(f, -1, -1)) == OkElement(f, 7, 7));
}

TEST_CASE("quotient ring by a non-rational modulus") {
    const Field& f = make_field(11);
    OkElement t = OkElement::theta(f);  // norm 3
    QuotientRing ring(t);
    CHECK(ring.size() == 3);
    // theta = 0 in the quotient
    CHECK(ring.reduce(t).is_zero());
    CHECK(ring.reduce(OkElement::integer(f, 3)).is_zero());
}

TEST_CASE("unit group orders at the prime above 2 follow the formula") {
    for (int d : {3, 11, 19, 43, 67, 163}) {
        PrimeIdeal q = inert_prime_above_2(make_field(d));
        std::size_t expected = 3;  // 4^n (1 - 1/4)
        for (int n = 1; n <= 4; ++n) {
            auto G = quotient_unit_group(q, n);
            CHECK(G.order() == expected);
            std::int64_t product = 1;
            for (auto inv : G.structure) product *= inv;
            CHECK(product == static_cast<std::int64_t>(G.order()));
            for (std::size_t i = 1; i < G.structure.size(); ++i) {
                CHECK(G.structure[i] % G.structure[i - 1] == 0);
            }
            expected *= 4;
        }
    }
}

TEST_CASE("(O_K/q^3)^* is (Z/2)^2 + Z/12 for every inert-2 field") {
    for (int d : {3, 11, 19, 43, 67, 163}) {
        auto G = quotient_unit_group(inert_prime_above_2(make_field(d)), 3);
        CHECK(G.order() == 48);
        CHECK(G.structure == std::vector<std::int64_t>{2, 2, 12});
    }
}

TEST_CASE("F_4^* is cyclic of order 3") {
    auto G = quotient_unit_group(inert_prime_above_2(make_field(11)), 1);
    CHECK(G.order() == 3);
    CHECK(G.structure == std::vector<std::int64_t>{3});
}

TEST_CASE("unit group of an odd prime-power quotient") {
    const Field& f = make_field(11);
    auto above3 = split_prime(f, 3);
    auto G = quotient_unit_group(above3[0], 2);
    CHECK(G.order() == 6);  // 9 (1 - 1/3)
    CHECK(G.structure == std::vector<std::int64_t>{6});
}

TEST_CASE("enumeration guard") {
    PrimeIdeal q = inert_prime_above_2(make_field(11));
    CHECK_THROWS_AS(quotient_unit_group(q, 10), std::domain_error);
    CHECK_THROWS_AS(quotient_unit_group(q, 0), std::invalid_argument);
}

#include <doctest.h>

#include <cmath>
#include <map>
#include <optional>
#include <random>

#include "fermatiq/factor.hpp"
#include "fermatiq/sieve.hpp"
#include "fermatiq/tables.hpp"
#include "helpers.hpp"

using namespace fermatiq;

namespace {

// Oracle: scan the full Hasse window and keep the 2-torsion congruence.
std::vector<std::int64_t> trace_set_brute(std::int64_t q) {
    std::vector<std::int64_t> out;
    for (std::int64_t a = -2 * q; a <= 2 * q; ++a) {
        if (static_cast<double>(a) * a > 4.0 * static_cast<double>(q)) continue;
        if ((q + 1 - a) % 4 == 0) out.push_back(a);
    }
    return out;
}

NewformRecord rational_form(const Field& K, std::map<std::string, long> values) {
    NewformRecord rec{K.d(), inert_prime_above_2(K), 4, HeckeField::rationals(), {}, "synthetic"};
    for (auto& [label, a] : values) {
        rec.eigenvalues.emplace(label, HeckeElement::integer(rec.hecke_field, a));
    }
    return rec;
}

// Eigenvalues copied from a curve's own traces across S.
NewformRecord form_matching_curve(const FreyCurve& E, const std::vector<PrimeIdeal>& S) {
    NewformRecord rec{E.input.field().d(), inert_prime_above_2(E.input.field()), 4,
                      HeckeField::rationals(), {}, "matching"};
    for (const auto& P : S) {
        std::int64_t a = trace_of_frobenius(E, P);
        rec.eigenvalues.emplace(P.label(), HeckeElement::integer(rec.hecke_field, a));
    }
    return rec;
}

}  // namespace

TEST_CASE("trace_set: pinned values") {
    CHECK(trace_set(3) == std::vector<std::int64_t>{0});
    CHECK(trace_set(9) == std::vector<std::int64_t>{-6, -2, 2, 6});
    CHECK(trace_set(25) == std::vector<std::int64_t>{-10, -6, -2, 2, 6, 10});
    CHECK_THROWS_AS(trace_set(4), std::invalid_argument);
    CHECK_THROWS_AS(trace_set(1), std::invalid_argument);
}

TEST_CASE("trace_set equals the brute-force scan") {
    for (std::int64_t l : primes_up_to(500)) {
        if (l == 2) continue;
        CHECK(trace_set(l) == trace_set_brute(l));
        if (l * l <= 2500) CHECK(trace_set(l * l) == trace_set_brute(l * l));
    }
}

TEST_CASE("bound_B: pinned values") {
    // rational eigenvalue 2 at norm 9: 2 lies in A_9, so B vanishes
    const Field& f19 = make_field(19);
    auto norm9 = split_prime(f19, 3);
    REQUIRE(norm9[0].residue_size() == 9);
    auto f_a2 = rational_form(f19, {{norm9[0].label(), 2}});
    CHECK(bound_B(f_a2, norm9[0]).is_zero());

    // rational eigenvalue 3 at norm 9: 9*(100-9)*(-9)(-5)(-1)(3) = -110565
    auto f_a3 = rational_form(f19, {{norm9[0].label(), 3}});
    HeckeElement B = bound_B(f_a3, norm9[0]);
    CHECK(B == HeckeElement::integer(f_a3.hecke_field, -110565));

    // eigenvalue t in t^2 - 2 at norm 3: 3*(16 - t^2)*(0 - t) = -42t,
    // of norm -3528
    const Field& f11 = make_field(11);
    auto norm3 = split_prime(f11, 3);
    REQUIRE(norm3[0].residue_size() == 3);
    NewformRecord rec{11, inert_prime_above_2(f11), 4, HeckeField({-2, 0, 1}), {}, "t-form"};
    rec.eigenvalues.emplace(norm3[0].label(),
                            HeckeElement::generator(rec.hecke_field));
    HeckeElement Bt = bound_B(rec, norm3[0]);
    CHECK(Bt == HeckeElement(rec.hecke_field, {0, -42}));
    CHECK(field_norm(Bt) == -3528);

    // missing eigenvalue errors
    CHECK_THROWS_AS(bound_B(rec, norm3[1]), std::out_of_range);
}

TEST_CASE("constant_C on a single-prime S") {
    const Field& f19 = make_field(19);
    auto norm9 = split_prime(f19, 3);
    auto rec = rational_form(f19, {{norm9[0].label(), 3}});
    SieveConfig config{{norm9[0]}, 17};
    SieveEntry entry = constant_C(rec, config);
    CHECK(entry.C == 110565);  // 3^5 * 5 * 7 * 13
    CHECK(entry.support == std::vector<std::int64_t>{3, 5, 7, 13});
    CHECK(entry.survivors.empty());
    CHECK(entry.eliminated);
}

TEST_CASE("constant_C reports no elimination when every B vanishes") {
    const Field& f = make_field(11);
    SieveConfig config = make_sieve_config(f);
    CHECK(config.p_floor == 17);
    // a newform whose eigenvalues all lie in the corresponding A_P
    NewformRecord rec{11, inert_prime_above_2(f), 4, HeckeField::rationals(), {}, "null"};
    for (const auto& P : config.S) {
        std::int64_t pick = trace_set(P.residue_size()).front();
        rec.eigenvalues.emplace(P.label(), HeckeElement::integer(rec.hecke_field, pick));
    }
    SieveEntry entry = constant_C(rec, config);
    CHECK(entry.C == 0);
    CHECK(!entry.eliminated);
    CHECK(entry.support.empty());
}

TEST_CASE("sieve soundness: matching eigensystems are never eliminated") {
    std::mt19937_64 rng(2024);
    for (int d : {11, 19}) {
        const Field& f = make_field(d);
        SieveConfig config = make_sieve_config(f);
        for (int i = 0; i < 3; ++i) {
            auto [a, b, c] = testing::random_coprime_triple(f, rng, false);
            std::optional<FreyCurve> E;
            try {
                E = build_frey(FreyInput::make(a, b, c, 5));
            } catch (const std::domain_error&) {
                continue;
            }
            // restrict S to good primes of the curve
            SieveConfig good{{}, config.p_floor};
            for (const auto& P : config.S) {
                if (reduction_type(*E, P).kind == ReductionKind::Good) good.S.push_back(P);
            }
            if (good.S.empty()) continue;
            NewformRecord rec = form_matching_curve(*E, good.S);
            SieveEntry entry = constant_C(rec, good);
            CHECK(entry.C == 0);
            CHECK(!entry.eliminated);
            // and congruence_check accepts the matching form at every prime
            for (const auto& P : good.S) {
                if (P.residue_char() == 17) continue;
                CHECK(congruence_check(*E, rec, P, 17));
            }
        }
    }
}

TEST_CASE("gcd monotonicity: enlarging S divides C") {
    const Field& f = make_field(43);
    SieveConfig small = make_sieve_config(f, 20);
    SieveConfig large = make_sieve_config(f, 50);
    REQUIRE(small.S.size() < large.S.size());
    NewformRecord rec{43, inert_prime_above_2(f), 4, HeckeField::rationals(), {}, "mono"};
    std::mt19937_64 rng(8);
    for (const auto& P : large.S) {
        std::int64_t bound = static_cast<std::int64_t>(2 * std::sqrt((double)P.residue_size()));
        std::uniform_int_distribution<std::int64_t> pick(-bound, bound);
        rec.eigenvalues.emplace(P.label(), HeckeElement::integer(rec.hecke_field, pick(rng)));
    }
    mpz_class c_small = constant_C(rec, small).C;
    mpz_class c_large = constant_C(rec, large).C;
    if (c_small != 0) {
        CHECK(mpz_divisible_p(c_small.get_mpz_t(), c_large.get_mpz_t()));
    }
}

TEST_CASE("congruence_check: pinned examples") {
    const Field& f19 = make_field(19);
    FreyCurve E = build_frey(FreyInput::make(OkElement::one(f19), OkElement::one(f19),
                                             -OkElement::one(f19), 5));
    auto above5 = split_prime(f19, 5);  // a_P(E) = -2 there
    // a_P(f) = 2 rational: N(-2-2) = -4, and 17 does not divide 4
    auto f_a2 = rational_form(f19, {{above5[0].label(), 2}});
    CHECK(!congruence_check(E, f_a2, above5[0], 17));
    // matching eigenvalue: difference 0, every p divides
    auto f_match = rational_form(f19, {{above5[0].label(), -2}});
    CHECK(congruence_check(E, f_match, above5[0], 17));
    CHECK(congruence_check(E, f_match, above5[0], 19));
    // a_P(E) = 0 at norm 3 over d=11, a_P(f) = 17: 17 | 17
    const Field& f11 = make_field(11);
    FreyCurve E11 = build_frey(FreyInput::make(OkElement::one(f11), OkElement::one(f11),
                                               -OkElement::one(f11), 5));
    auto above3 = split_prime(f11, 3);
    auto f_17 = rational_form(f11, {{above3[0].label(), 17}});
    CHECK(congruence_check(E11, f_17, above3[0], 17));
    // P above 2 or above p is rejected
    CHECK_THROWS_AS(congruence_check(E11, f_17, inert_prime_above_2(f11), 17),
                    std::domain_error);
    auto above17 = split_prime(f19, 17);
    auto f_at17 = rational_form(f19, {{above17[0].label(), 0}});
    CHECK_THROWS_AS(congruence_check(E, f_at17, above17[0], 17), std::domain_error);
}

TEST_CASE("obstruction constants are (3, 3) for the six fields") {
    for (int d : {3, 11, 19, 43, 67, 163}) {
        auto obs = obstruction_constants(make_field(d));
        CHECK(obs.norm_q_minus_1 == 3);
        CHECK(obs.two_norm_sq_minus_1 == 3);
    }
    CHECK_THROWS_AS(obstruction_constants(make_field(7)), std::domain_error);
}

TEST_CASE("exponent floors") {
    CHECK(exponent_floor(make_field(163), {2, 3, 5, 11, 17}) == 19);
    CHECK(exponent_floor(make_field(43), {2, 3}) == 17);
    CHECK(exponent_floor(make_field(11), {}) == 17);
    for (int d : {3, 11, 19, 43, 67}) {
        CHECK(default_exponent_floor(make_field(d)) == 17);
    }
    CHECK(default_exponent_floor(make_field(163)) == 19);
}

TEST_CASE("sieve config defaults") {
    SieveConfig config = make_sieve_config(make_field(163));
    CHECK(config.p_floor == 19);
    for (const auto& P : config.S) {
        CHECK(P.is_odd());
        CHECK(P.residue_size() <= 50);
    }
    CHECK_THROWS_AS(constant_C(rational_form(make_field(11), {}), SieveConfig{{}, 17}),
                    std::invalid_argument);
}

#include "fermatiq/sieve.hpp"

#include <stdexcept>

#include "fermatiq/factor.hpp"
#include "fermatiq/tables.hpp"

namespace fermatiq {

std::vector<std::int64_t> trace_set(std::int64_t q_norm) {
    if (q_norm < 3 || q_norm % 2 == 0) {
        throw std::invalid_argument("trace_set: " + std::to_string(q_norm) +
                                    " is not the norm of an odd prime");
    }
    mpz_class root = sqrt(mpz_class(4 * static_cast<long>(q_norm)));  // floor(2 sqrt(q))
    const std::int64_t bound = root.get_si();
    std::vector<std::int64_t> out;
    for (std::int64_t a = -bound; a <= bound; ++a) {
        if ((q_norm + 1 - a) % 4 == 0) out.push_back(a);
    }
    return out;
}

SieveConfig make_sieve_config(const Field& field, std::int64_t max_norm,
                              std::optional<std::int64_t> p_floor) {
    SieveConfig config;
    for (auto& P : primes_up_to_norm(field, max_norm)) {
        if (P.is_odd()) config.S.push_back(P);
    }
    config.p_floor = p_floor ? *p_floor : default_exponent_floor(field);
    return config;
}

HeckeElement bound_B(const NewformRecord& f, const PrimeIdeal& P) {
    const HeckeElement& a = f.eigenvalue(P);  // throws when missing
    const std::int64_t N = P.residue_size();
    const HeckeField& Qf = a.field();
    mpz_class np1 = mpz_class(static_cast<long>(N)) + 1;
    HeckeElement mult_factor =
        HeckeElement::integer(Qf, np1 * np1) - a * a;
    HeckeElement B = HeckeElement::integer(Qf, static_cast<long>(N)) * mult_factor;
    for (std::int64_t t : trace_set(N)) {
        B = B * (HeckeElement::integer(Qf, static_cast<long>(t)) - a);
    }
    return B;
}

SieveEntry constant_C(const NewformRecord& f, const SieveConfig& config) {
    if (config.S.empty()) throw std::invalid_argument("constant_C: empty prime set S");
    SieveEntry entry;
    entry.newform = f.source;
    entry.level = f.level_label();
    entry.C = 0;
    for (const auto& P : config.S) {
        mpz_class n = abs(field_norm(bound_B(f, P)));
        mpz_gcd(entry.C.get_mpz_t(), entry.C.get_mpz_t(), n.get_mpz_t());
    }
    if (entry.C != 0) {
        entry.support = prime_support(entry.C);
        for (std::int64_t q : entry.support) {
            if (q >= config.p_floor) entry.survivors.push_back(q);
        }
        entry.eliminated = entry.survivors.empty();
    }
    return entry;
}

ObstructionConstants obstruction_constants(const Field& field) {
    PrimeIdeal q = inert_prime_above_2(field);  // throws unless 2 is inert
    // For split p, the completion K_p1 = Q_p is a degree-one extension,
    // so the local norm of 2 is 2 itself.
    const std::int64_t local_norm_of_two = 2;
    return ObstructionConstants{q.residue_size() - 1,
                                local_norm_of_two * local_norm_of_two - 1};
}

std::int64_t exponent_floor(const Field& field, const std::vector<std::int64_t>& torsion_primes) {
    (void)field;
    for (std::int64_t p = 17;; ++p) {
        if (!is_prime(p)) continue;
        bool excluded = false;
        for (std::int64_t t : torsion_primes) excluded = excluded || (t == p);
        if (!excluded) return p;
    }
}

bool congruence_check(const FreyCurve& curve, const NewformRecord& f, const PrimeIdeal& P,
                      std::int64_t p) {
    if (P.residue_char() == 2) throw std::domain_error("congruence_check: P lies above 2");
    if (P.residue_char() == p) throw std::domain_error("congruence_check: P lies above p");
    const HeckeElement& af = f.eigenvalue(P);
    const HeckeField& Qf = af.field();
    ReductionData rd = reduction_type(curve, P);
    mpz_class n;
    if (rd.kind == ReductionKind::Good) {
        std::int64_t aE = trace_of_frobenius(curve, P);
        n = field_norm(HeckeElement::integer(Qf, static_cast<long>(aE)) - af);
    } else {
        mpz_class np1 = mpz_class(static_cast<long>(P.residue_size())) + 1;
        n = field_norm(HeckeElement::integer(Qf, np1 * np1) - af * af);
    }
    return mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p)) != 0;
}

}  // namespace fermatiq

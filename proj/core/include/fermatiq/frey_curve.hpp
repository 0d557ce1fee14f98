#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fermatiq/cokernel.hpp"
#include "fermatiq/prime_ideal.hpp"

namespace fermatiq {

/// A candidate triple (a, b, c) with prime exponent p for the equation
/// a^p + b^p + c^p = 0. Non-solutions are accepted (is_solution records
/// whether the relation actually holds) so the sieve and tests can run
/// on arbitrary coprime inputs.
///
/// Unit-class scalings multiply the triple diagonally by a cokernel
/// representative lambda; the representative is recorded in scale() and
/// pairwise coprimality is enforced on the underlying primitive triple.
class FreyInput {
public:
    /// Validates: no zero entry, pairwise coprime, p prime.
    static FreyInput make(const OkElement& a, const OkElement& b, const OkElement& c,
                          std::int64_t p);

    const OkElement& a() const noexcept { return a_; }
    const OkElement& b() const noexcept { return b_; }
    const OkElement& c() const noexcept { return c_; }
    std::int64_t p() const noexcept { return p_; }
    bool is_solution() const noexcept { return is_solution_; }
    const OkElement& scale() const noexcept { return scale_; }
    bool is_primitive() const { return scale_.is_unit(); }
    const Field& field() const noexcept { return a_.field(); }

    OkElement primitive_a() const { return *a_.divide_exact(scale_); }
    OkElement primitive_b() const { return *b_.divide_exact(scale_); }
    OkElement primitive_c() const { return *c_.divide_exact(scale_); }

    FreyInput scaled_by(const OkElement& lambda) const;

private:
    FreyInput(OkElement a, OkElement b, OkElement c, std::int64_t p, OkElement scale);

    OkElement a_, b_, c_;
    std::int64_t p_;
    bool is_solution_;
    OkElement scale_;
};

/// Y^2 = X(X - A)(X + B) with A = a^p, B = b^p, and its invariants:
///   c4 = 16(A^2 + AB + B^2),  Delta = 16 A^2 B^2 (A + B)^2,
///   j = c4^3 / Delta = j_num / j_den in lowest ideal terms.
struct FreyCurve {
    FreyInput input;
    OkElement A, B;
    OkElement c4, delta;
    OkElement j_num, j_den;
};

FreyCurve build_frey(const FreyInput& input);

/// Valuation at q | 2 of the factored j-form
///   2^4 (b^{2p} - a^p c^p)^3 / (abc)^{2p},
/// computed from actual element valuations; for any coprime triple with
/// 2 | abc this equals 4 - 2p*v_q(abc). Note the reduced invariant
/// j_num/j_den = c4^3/Delta carries an extra factor 2^4, so its honest
/// valuation (see j_valuation) sits 4*v_q(2) higher.
/// Errors: q not above 2; 2 not dividing abc.
std::int64_t v_q_of_j(const FreyCurve& curve, const PrimeIdeal& q);

/// True valuation v_P(j) = v_P(j_num) - v_P(j_den). Throws when j = 0.
std::int64_t j_valuation(const FreyCurve& curve, const PrimeIdeal& P);

enum class ReductionKind { Good, Multiplicative, Additive };

struct ReductionData {
    PrimeIdeal prime;
    ReductionKind kind;
    std::optional<std::int64_t> a_l;          // set when good and counted
    std::optional<std::int64_t> point_count;  // #E(F_P) including infinity
};

/// Reduction kind at an odd prime: good iff v_P(Delta) = 0,
/// multiplicative iff v_P(Delta) > 0 and v_P(c4) = 0. Additive cannot
/// occur for a primitive coprime triple at odd P and trips an assertion
/// there; unit-class-scaled triples do acquire additive primes at P
/// dividing the scaling representative.
/// Errors: P above 2 (no Tate algorithm at even residue characteristic).
ReductionData reduction_type(const FreyCurve& curve, const PrimeIdeal& P);

/// a_P = N(P) + 1 - #E(F_P) by x-enumeration with the quadratic
/// character of the cubic. Errors: bad reduction, or residue field
/// beyond 10^6.
std::int64_t trace_of_frobenius(const FreyCurve& curve, const PrimeIdeal& P);

/// reduction_type plus the trace when good reduction and the residue
/// field is within the counting guard.
ReductionData reduction_data(const FreyCurve& curve, const PrimeIdeal& P);

/// The four unit-class-scaled candidate triples (lambda*a, lambda*b,
/// lambda*c), one per cokernel representative. Requires 2 | abc.
std::vector<FreyInput> scale_by_representatives(const FreyInput& input,
                                                const CokernelReport& reps);

}  // namespace fermatiq

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fermatiq/frey_curve.hpp"
#include "fermatiq/newform.hpp"

namespace fermatiq {

/// The admissible trace set at a prime of odd norm q:
///   A_q = { a in Z : |a| <= 2 sqrt(q), q + 1 - a = 0 (mod 4) },
/// ascending. The congruence encodes full 2-torsion of the reduced
/// Frey curve.
std::vector<std::int64_t> trace_set(std::int64_t q_norm);

struct SieveConfig {
    std::vector<PrimeIdeal> S;  // odd primes, coprime to the level
    std::int64_t p_floor = 17;
};

/// S = all odd primes of norm <= max_norm (default 50, mirroring the
/// "norm less than 50" window); p_floor defaults to the embedded
/// torsion-table floor (19 for d = 163, 17 otherwise).
SieveConfig make_sieve_config(const Field& field, std::int64_t max_norm = 50,
                              std::optional<std::int64_t> p_floor = std::nullopt);

/// B_{f,P} = N(P) * ((N(P)+1)^2 - a_P(f)^2) * prod_{a in A_P} (a - a_P(f)),
/// an element of Q_f combining the good-reduction product with the
/// multiplicative-reduction factor for the same running prime P.
HeckeElement bound_B(const NewformRecord& f, const PrimeIdeal& P);

struct SieveEntry {
    std::string newform;
    std::string level;
    mpz_class C;                          // gcd over S of |N(B_{f,P})|
    std::vector<std::int64_t> support;    // prime support of C
    std::vector<std::int64_t> survivors;  // support >= p_floor
    bool eliminated = false;              // C != 0 and no survivors
};

/// C = 0 is reported as "no elimination" (eliminated = false, empty
/// support).
SieveEntry constant_C(const NewformRecord& f, const SieveConfig& config);

/// The two constants from the irreducibility argument at the inert
/// prime q | 2: N(q) - 1 and N_{K_p1/Q_p}(2)^2 - 1 (a degree-one local
/// extension, so the local norm of 2 is 2). Both equal 3 for each of
/// the six fields; a prime exponent p >= 17 can divide neither.
struct ObstructionConstants {
    std::int64_t norm_q_minus_1;
    std::int64_t two_norm_sq_minus_1;
};
ObstructionConstants obstruction_constants(const Field& field);

/// Smallest admissible prime exponent: the least prime >= 17 avoiding
/// the torsion primes of the level-q^4 abelianization (19 for d = 163).
std::int64_t exponent_floor(const Field& field, const std::vector<std::int64_t>& torsion_primes);

/// Whether the trace congruence between the curve and the newform can
/// hold at P modulo (a prime above) p: good reduction tests
/// p | N(a_P(E) - a_P(f)), multiplicative reduction tests
/// p | N((N(P)+1)^2 - a_P(f)^2). Errors when P lies above 2 or p.
bool congruence_check(const FreyCurve& curve, const NewformRecord& f, const PrimeIdeal& P,
                      std::int64_t p);

}  // namespace fermatiq

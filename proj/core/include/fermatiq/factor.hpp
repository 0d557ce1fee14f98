#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace fermatiq {

bool is_prime(std::int64_t n);

/// Rational primes in [2, n], ascending.
std::vector<std::int64_t> primes_up_to(std::int64_t n);

/// Prime factorization of |n| as (prime, exponent) pairs, ascending.
/// Trial division up to 10^6, then a primality check on the cofactor;
/// throws std::domain_error if the cofactor is composite (desk-scale
/// inputs never get there). n = 0 and |n| = 1 yield an empty list.
std::vector<std::pair<mpz_class, int>> factorize(const mpz_class& n);

/// Distinct prime factors of |n| that fit in int64, ascending.
std::vector<std::int64_t> prime_support(const mpz_class& n);

}  // namespace fermatiq

#include "fermatiq/factor.hpp"

#include <stdexcept>

namespace fermatiq {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    mpz_class z(static_cast<long>(n));
    return mpz_probab_prime_p(z.get_mpz_t(), 30) != 0;
}

std::vector<std::int64_t> primes_up_to(std::int64_t n) {
    std::vector<std::int64_t> out;
    if (n < 2) return out;
    std::vector<bool> sieve(static_cast<std::size_t>(n) + 1, true);
    for (std::int64_t i = 2; i <= n; ++i) {
        if (!sieve[static_cast<std::size_t>(i)]) continue;
        out.push_back(i);
        for (std::int64_t j = i * i; j <= n; j += i) sieve[static_cast<std::size_t>(j)] = false;
    }
    return out;
}

std::vector<std::pair<mpz_class, int>> factorize(const mpz_class& n) {
    std::vector<std::pair<mpz_class, int>> out;
    mpz_class m = abs(n);
    if (m <= 1) return out;
    for (std::int64_t p = 2; p <= 1000000 && m > 1; p = (p == 2 ? 3 : p + 2)) {
        if (!mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) continue;
        int e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) {
            m /= static_cast<unsigned long>(p);
            ++e;
        }
        out.emplace_back(mpz_class(static_cast<long>(p)), e);
        if (mpz_class(p) * p > m) break;
    }
    if (m > 1) {
        if (mpz_probab_prime_p(m.get_mpz_t(), 30) == 0) {
            throw std::domain_error("factorize: composite cofactor " + m.get_str() +
                                    " beyond trial-division range");
        }
        out.emplace_back(m, 1);
    }
    return out;
}

std::vector<std::int64_t> prime_support(const mpz_class& n) {
    std::vector<std::int64_t> out;
    for (const auto& [p, e] : factorize(n)) {
        if (!p.fits_slong_p()) throw std::domain_error("prime_support: factor too large");
        out.push_back(p.get_si());
    }
    return out;
}

}  // namespace fermatiq

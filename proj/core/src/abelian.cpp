#include "fermatiq/abelian.hpp"

#include <algorithm>
#include <stdexcept>

#include "fermatiq/factor.hpp"

namespace fermatiq {

namespace {

std::size_t pow_index(std::size_t g, std::int64_t e,
                      const std::function<std::size_t(std::size_t, std::size_t)>& mul,
                      std::size_t identity) {
    std::size_t result = identity;
    std::size_t base = g;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

}  // namespace

std::vector<std::int64_t> invariant_factors_indexed(
    std::size_t order, const std::function<std::size_t(std::size_t, std::size_t)>& mul,
    std::size_t identity) {
    if (order <= 1) return {};
    auto factors = factorize(mpz_class(static_cast<long>(order)));

    // Per prime p: partition lambda_1 >= lambda_2 >= ... with
    // #{g : g^(p^i) = 1} = p^(sum_j min(lambda_j, i)).
    std::vector<std::vector<int>> partitions;  // per prime, descending part sizes
    std::vector<std::int64_t> primes;
    for (const auto& [pz, a] : factors) {
        const std::int64_t p = pz.get_si();
        std::vector<int> exps = {0};  // e_0
        std::int64_t pe = 1;
        for (int i = 1; i <= a; ++i) {
            pe *= p;
            std::size_t cnt = 0;
            for (std::size_t g = 0; g < order; ++g) {
                if (pow_index(g, pe, mul, identity) == identity) ++cnt;
            }
            int e = 0;
            std::size_t check = 1;
            while (check < cnt) {
                check *= static_cast<std::size_t>(p);
                ++e;
            }
            if (check != cnt) throw std::logic_error("invariant_factors: group is not abelian");
            exps.push_back(e);
            if (e == exps[static_cast<std::size_t>(i) - 1]) break;  // stabilized
        }
        // m_i = e_i - e_{i-1} counts parts of size >= i; conjugate back.
        std::vector<int> m;
        for (std::size_t i = 1; i < exps.size(); ++i) m.push_back(exps[i] - exps[i - 1]);
        std::vector<int> parts;
        for (int j = 1; j <= (m.empty() ? 0 : m[0]); ++j) {
            int size = 0;
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (m[i] >= j) size = static_cast<int>(i) + 1;
            }
            parts.push_back(size);
        }
        std::sort(parts.rbegin(), parts.rend());
        partitions.push_back(parts);
        primes.push_back(p);
    }

    std::size_t k = 0;
    for (const auto& parts : partitions) k = std::max(k, parts.size());
    std::vector<std::int64_t> inv(k, 1);
    for (std::size_t pi = 0; pi < partitions.size(); ++pi) {
        for (std::size_t j = 0; j < partitions[pi].size(); ++j) {
            std::int64_t q = 1;
            for (int t = 0; t < partitions[pi][j]; ++t) q *= primes[pi];
            inv[j] *= q;  // j-th largest invariant factor collects p^(lambda_j)
        }
    }
    std::reverse(inv.begin(), inv.end());  // ascending d_1 | d_2 | ...
    return inv;
}

}  // namespace fermatiq

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

namespace fermatiq {

/// Invariant factors d_1 | d_2 | ... | d_k (ascending; empty for the
/// trivial group; product equals the order) of a finite abelian group
/// given as indices 0..order-1 with a multiplication map and identity.
/// Brute force: counts solutions of g^(p^i) = 1 per prime p | order and
/// reads the cyclic decomposition off the counts.
std::vector<std::int64_t> invariant_factors_indexed(
    std::size_t order, const std::function<std::size_t(std::size_t, std::size_t)>& mul,
    std::size_t identity);

/// Convenience wrapper for element lists: `key` must injectively map an
/// element to a string.
template <typename Elt, typename Mul, typename Key>
std::vector<std::int64_t> invariant_factors(const std::vector<Elt>& elements, Mul mul,
                                            const Elt& identity, Key key) {
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < elements.size(); ++i) index[key(elements[i])] = i;
    std::function<std::size_t(std::size_t, std::size_t)> mul_idx =
        [&](std::size_t i, std::size_t j) {
            return index.at(key(mul(elements[i], elements[j])));
        };
    return invariant_factors_indexed(elements.size(), mul_idx, index.at(key(identity)));
}

}  // namespace fermatiq

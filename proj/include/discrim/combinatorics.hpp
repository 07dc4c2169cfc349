#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace discrim {

using Subset = std::vector<std::size_t>;

std::uint64_t binomial(std::size_t n, std::size_t k);

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<Subset> k_subsets(std::size_t n, std::size_t k);

/// Calls fn(subset) for every k-subset of {0..n-1} in lexicographic order;
/// stops early when fn returns false.
template <typename Fn>
void for_each_k_subset(std::size_t n, std::size_t k, Fn&& fn) {
    if (k > n) return;
    Subset s(k);
    for (std::size_t i = 0; i < k; ++i) s[i] = i;
    while (true) {
        if (!fn(static_cast<const Subset&>(s))) return;
        std::size_t i = k;
        while (i > 0 && s[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++s[i - 1];
        for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
    }
}

bool is_subset(const Subset& small, const Subset& big);

}  // namespace discrim

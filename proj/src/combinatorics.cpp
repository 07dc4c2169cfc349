#include "discrim/combinatorics.hpp"

#include <algorithm>

namespace discrim {

std::uint64_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<Subset> k_subsets(std::size_t n, std::size_t k) {
    std::vector<Subset> out;
    out.reserve(binomial(n, k));
    for_each_k_subset(n, k, [&](const Subset& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

bool is_subset(const Subset& small, const Subset& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace discrim

#include "discrim/discriminantal.hpp"

#include <algorithm>

namespace discrim {

DiscriminantalArrangement::DiscriminantalArrangement(std::size_t n, std::size_t k, std::vector<Vector> trace,
                                                     std::vector<DiscriminantalHyperplane> hyperplanes)
    : n_(n), k_(k), trace_(std::move(trace)), hyperplanes_(std::move(hyperplanes)) {}

std::size_t DiscriminantalArrangement::index_of(const Subset& subset) const {
    if (subset.size() != k_ + 1) throw std::invalid_argument("index_of: subset must have k+1 elements");
    auto it = std::lower_bound(hyperplanes_.begin(), hyperplanes_.end(), subset,
                               [](const DiscriminantalHyperplane& h, const Subset& s) { return h.subset < s; });
    if (it == hyperplanes_.end() || it->subset != subset) throw std::out_of_range("index_of: no such hyperplane");
    return static_cast<std::size_t>(it - hyperplanes_.begin());
}

std::size_t DiscriminantalArrangement::rank() const {
    std::vector<Vector> rows;
    rows.reserve(hyperplanes_.size());
    for (const auto& h : hyperplanes_) rows.push_back(h.alpha);
    return discrim::rank(Matrix::from_rows(rows, n_));
}

DiscriminantalHyperplane alpha_normal(const std::vector<Vector>& normals, const Subset& subset) {
    const std::size_t n = normals.size();
    if (n == 0) throw std::invalid_argument("alpha_normal: empty arrangement");
    const std::size_t k = normals.front().size();
    if (subset.size() != k + 1) throw std::invalid_argument("alpha_normal: subset must have k+1 elements");
    if (!std::is_sorted(subset.begin(), subset.end()) ||
        std::adjacent_find(subset.begin(), subset.end()) != subset.end() || subset.back() >= n)
        throw std::invalid_argument("alpha_normal: subset must be strictly increasing indices below n");

    Vector alpha(n);
    for (std::size_t j = 0; j <= k; ++j) {
        Matrix minor(k, k);
        std::size_t r = 0;
        for (std::size_t t = 0; t <= k; ++t) {
            if (t == j) continue;
            for (std::size_t c = 0; c < k; ++c) minor(r, c) = normals[subset[t]][c];
            ++r;
        }
        Scalar m = det(minor);
        if (m.is_zero())
            throw PreconditionError("degenerate_subset", "normals of the subset are not in general position", subset);
        // j is 0-based here, so (-1)^(j+1) is the 1-based (-1)^j.
        alpha[subset[j]] = (j % 2 == 0) ? -m : m;
    }
    return {subset, canonical_projective(alpha)};
}

DiscriminantalHyperplane alpha_normal(const Arrangement& a, const Subset& subset) {
    return alpha_normal(a.normals(), subset);
}

DiscriminantalArrangement build_discriminantal(const Arrangement& a) {
    require_generic(a);
    const std::size_t n = a.size();
    const std::size_t k = a.dimension();
    if (n <= k) throw PreconditionError("too_few_hyperplanes", "B(n,k,A) needs n > k");
    const std::vector<Vector> normals = a.normals();
    std::vector<DiscriminantalHyperplane> hs;
    hs.reserve(binomial(n, k + 1));
    for_each_k_subset(n, k + 1, [&](const Subset& s) {
        hs.push_back(alpha_normal(normals, s));
        return true;
    });
    return DiscriminantalArrangement(n, k, normals, std::move(hs));
}

}  // namespace discrim

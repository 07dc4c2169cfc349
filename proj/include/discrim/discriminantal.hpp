#pragma once

#include "discrim/arrangement.hpp"
#include "discrim/combinatorics.hpp"

#include <cstddef>
#include <vector>

namespace discrim {

/// D_L: the central hyperplane of translates in which the k+1 hyperplanes of L
/// fail to be in general position. `alpha` is its canonical normal in n-space.
struct DiscriminantalHyperplane {
    Subset subset;  // sorted, 0-based
    Vector alpha;
};

class DiscriminantalArrangement {
public:
    DiscriminantalArrangement(std::size_t n, std::size_t k, std::vector<Vector> trace,
                              std::vector<DiscriminantalHyperplane> hyperplanes);

    std::size_t n() const noexcept { return n_; }
    std::size_t k() const noexcept { return k_; }
    std::size_t size() const noexcept { return hyperplanes_.size(); }
    /// Normals of the source arrangement.
    const std::vector<Vector>& trace() const noexcept { return trace_; }
    const std::vector<DiscriminantalHyperplane>& hyperplanes() const noexcept { return hyperplanes_; }
    const DiscriminantalHyperplane& operator[](std::size_t i) const { return hyperplanes_[i]; }

    /// Position of D_L in the lexicographic list; throws if |L| != k+1.
    std::size_t index_of(const Subset& subset) const;
    /// Rank of the whole family of normals (n - k for a generic source).
    std::size_t rank() const;

private:
    std::size_t n_;
    std::size_t k_;
    std::vector<Vector> trace_;
    std::vector<DiscriminantalHyperplane> hyperplanes_;
};

/*
 * Normal of D_L. With L = {i_1 < ... < i_{k+1}}, coordinate i_j is
 * (-1)^j det(alpha_{i_1}, ..., omit alpha_{i_j}, ..., alpha_{i_{k+1}}) and all
 * other coordinates vanish; the result is then canonicalized. Throws
 * PreconditionError("degenerate_subset") when k of the k+1 normals are dependent.
 */
DiscriminantalHyperplane alpha_normal(const std::vector<Vector>& normals, const Subset& subset);
DiscriminantalHyperplane alpha_normal(const Arrangement& a, const Subset& subset);

/// B(n,k,A) for a generic arrangement A, hyperplanes ordered lexicographically by L.
DiscriminantalArrangement build_discriminantal(const Arrangement& a);

}  // namespace discrim

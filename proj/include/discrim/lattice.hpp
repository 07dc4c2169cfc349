#pragma once

#include "discrim/discriminantal.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace discrim {

/*
 * An element of the intersection lattice of a central arrangement.
 *
 * `indices` lists (ascending) every hyperplane of B containing the flat, so it
 * is closed; `witness` is a minimal generating subset of size `rank`;
 * `subspace` is the span of the normals, i.e. the orthogonal complement of the
 * flat, kept in canonical echelon form.
 */
struct Flat {
    std::vector<std::size_t> indices;
    std::size_t rank = 0;
    std::vector<std::size_t> witness;
    Subspace subspace;

    std::size_t multiplicity() const noexcept { return indices.size(); }
};

/// The (k+1)-subsets labelling the hyperplanes of a flat.
std::vector<Subset> index_family(const DiscriminantalArrangement& b, const Flat& flat);

/// Smallest flat containing the given hyperplanes (by position in B).
Flat closure(const DiscriminantalArrangement& b, const std::vector<std::size_t>& generators);
/// Same, with hyperplanes named by their (k+1)-subsets.
Flat closure(const DiscriminantalArrangement& b, const std::vector<Subset>& generators);

/// Closure of all (k+1)-subsets of K: the flat D_K.
Flat flat_of_set(const DiscriminantalArrangement& b, const Subset& k_set);

struct Lattice {
    /// by_rank[r] holds the rank-r flats ordered by index set; by_rank[0] is the whole space.
    std::vector<std::vector<Flat>> by_rank;
};

/// Breadth-first construction of every flat of rank <= max_rank.
Lattice flats_up_to_rank(const DiscriminantalArrangement& b, std::size_t max_rank);

/*
 * True iff |U_{i in I} S_i| > k + sum_{i in I}(|S_i| - k) for every
 * sub-family I with |I| >= 2. Throws PreconditionError if some S_i has fewer
 * than k+1 elements or leaves [n].
 */
bool athanasiadis_predicate(const std::vector<Subset>& family, std::size_t n, std::size_t k);

/*
 * Simplicity test for flats of B(n,2,A). A flat X is simple when no
 * sub-family of its hyperplanes intersects in some D_K with |K| > 3. Every such
 * intersection contains X, so the test reduces to checking X against the
 * subspaces D_K for all K with 4 <= |K| <= n, which are precomputed here.
 */
class SimplicityOracle {
public:
    explicit SimplicityOracle(const DiscriminantalArrangement& b);

    bool is_simple(const Flat& x) const;
    /// The first K (in size-then-lexicographic order) with X inside D_K, if any.
    std::optional<Subset> obstruction(const Flat& x) const;

private:
    std::vector<std::pair<Subset, Subspace>> sets_;
};

struct SimpleIntersectionReport {
    Flat flat;
    bool simple = false;
    bool non_very_generic = false;
};

/// Classification of every rank-r flat of B(n,2,A).
std::vector<SimpleIntersectionReport> simple_intersections(const DiscriminantalArrangement& b, std::size_t r);
std::vector<SimpleIntersectionReport> classify(const DiscriminantalArrangement& b, const SimplicityOracle& oracle,
                                               const std::vector<Flat>& flats);

struct VeryGenericReport {
    bool very_generic = true;
    std::vector<Flat> witnesses;
};

/// Looks for non-very-generic simple flats among ranks 1..max_rank.
VeryGenericReport very_generic_report(const DiscriminantalArrangement& b, std::size_t max_rank);

}  // namespace discrim

#pragma once

#include "discrim/arrangement.hpp"
#include "discrim/lattice.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace discrim {

using IndexPair = std::pair<std::size_t, std::size_t>;  // i < j, 0-based

Vector cross(std::span<const Scalar> x, std::span<const Scalar> y);
/// Line through two projective points, or point on two projective lines.
ProjectiveFlat join(std::span<const Scalar> x, std::span<const Scalar> y);
bool incident(std::span<const Scalar> line, std::span<const Scalar> point);
/// True when all given lines pass through one projective point.
bool concurrent(const std::vector<ProjectiveFlat>& lines);

/// Projective closures of the affine lines of a k = 2 arrangement: a.x = c becomes (a1, a2, -c).
std::vector<ProjectiveFlat> homogenize(const Arrangement& a);
/// k = 2 arrangements are homogenized, k = 3 arrangements give their trace at infinity.
std::vector<ProjectiveFlat> planar_lines(const Arrangement& a);

/// Back to affine form over the chart z = 0; fails for the line at infinity.
Arrangement dehomogenize(const std::vector<ProjectiveFlat>& lines, const std::vector<std::string>& labels,
                         Field field);

/*
 * Coordinates in which `at_infinity` becomes z = 0. Returns the images of
 * `lines`; the chart line itself (if present) maps to (0, 0, 1).
 */
std::vector<ProjectiveFlat> change_chart(const std::vector<ProjectiveFlat>& lines, const ProjectiveFlat& at_infinity);

struct IncidencePoint {
    ProjectiveFlat point;
    std::vector<std::size_t> lines;  // ascending
    std::size_t multiplicity() const noexcept { return lines.size(); }
};

struct IncidenceStats {
    std::size_t lines = 0;
    std::vector<IncidencePoint> points;  // ordered by canonical point
    std::map<std::size_t, std::size_t> t;  // multiplicity -> number of points

    std::size_t count(std::size_t multiplicity) const {
        auto it = t.find(multiplicity);
        return it == t.end() ? 0 : it->second;
    }
    std::size_t max_multiplicity() const { return t.empty() ? 0 : t.rbegin()->first; }
};

/*
 * Exact point census of pairwise distinct projective lines. Every returned
 * census has been checked against sum_k t_k C(k,2) = C(s,2); a violation is
 * a logic_error. Throws PreconditionError("duplicate_line").
 */
IncidenceStats incidence_stats(const std::vector<ProjectiveFlat>& lines);

/// Number of censuses produced by incidence_stats in this process (all checked).
std::uint64_t census_identity_checks();

struct Collinearity {
    ProjectiveFlat axis;
    std::vector<IndexPair> points;  // ascending, pairwise disjoint
};

/*
 * Maximal sets of at least three double points lying on a line that is not
 * one of the input lines. Requires no three input lines to be concurrent
 * (PreconditionError "not_generic").
 */
std::vector<Collinearity> collinearity_conditions(const std::vector<ProjectiveFlat>& lines);

/// Double point of lines i and j.
ProjectiveFlat double_point(const std::vector<ProjectiveFlat>& lines, IndexPair p);

/// Seed used whenever the caller does not supply one.
inline constexpr std::uint64_t kDefaultSeed = 20190617;

/*
 * A translate of `a` (k = 2) whose offset vector lies on the flat X of
 * B = B(n,2,A) and off every D_L not containing X. Candidates are integer
 * combinations of a basis of X with a coordinate bound that doubles until one
 * passes; the generator is seeded, so results are reproducible.
 */
Arrangement realize_translate(const Arrangement& a, const DiscriminantalArrangement& b, const Flat& x,
                              std::uint64_t seed = kDefaultSeed);

struct QuadrilateralTranslate {
    Flat flat;
    Arrangement translate;
};

/// Rank-3 multiplicity-4 simple flats of B(6,2,A), each with a realized translate.
std::vector<QuadrilateralTranslate> quadrilateral_translates(const Arrangement& a,
                                                             std::uint64_t seed = kDefaultSeed);

}  // namespace discrim

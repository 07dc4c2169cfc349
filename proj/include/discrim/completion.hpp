#pragma once

#include "discrim/lattice.hpp"
#include "discrim/planar.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace discrim {

/// A product of disjoint transpositions on line indices (0-based internally).
class Involution {
public:
    Involution() = default;
    /// Throws PreconditionError("bad_sigma") when pairs overlap or leave [n].
    Involution(std::vector<IndexPair> transpositions, std::size_t n);

    /// Cycle notation with 1-based labels, e.g. "(1 6)(2 5)(3 4)".
    static Involution parse(const std::string& text, std::size_t n);

    const std::vector<IndexPair>& transpositions() const noexcept { return pairs_; }
    std::size_t degree() const noexcept { return n_; }
    bool is_identity() const noexcept { return pairs_.empty(); }

    std::size_t operator()(std::size_t i) const { return image_.at(i); }
    IndexPair operator()(IndexPair p) const;
    Subset operator()(const Subset& s) const;

    std::string to_string() const;
    friend bool operator==(const Involution& x, const Involution& y) { return x.pairs_ == y.pairs_ && x.n_ == y.n_; }

private:
    std::vector<IndexPair> pairs_;
    std::vector<std::size_t> image_;
    std::size_t n_ = 0;
};

/// Every product of disjoint transpositions in S_n, identity included, ordered by transposition list.
std::vector<Involution> all_involutions(std::size_t n);

/// sigma maps every collinearity's point set onto itself.
bool acts_strongly(const Involution& sigma, const std::vector<Collinearity>& collinearities);

/*
 * Non-identity involutions acting strongly on the double points of `lines`.
 * Throws PreconditionError("no_collinearities") when there is nothing to fix.
 */
std::vector<Involution> strong_involutions(const std::vector<ProjectiveFlat>& lines);

struct CompletionResult {
    Involution sigma;
    std::vector<ProjectiveFlat> lines;
    /// Double point of the source lines -> index of the unique completion line through it.
    std::map<IndexPair, std::size_t> orbit_map;
    /// Completion lines carrying at least three double points.
    std::vector<std::size_t> axes;

    friend bool operator==(const CompletionResult&, const CompletionResult&) = default;
};

/*
 * The sigma-completion: one line through P and sigma.P for every two-point
 * orbit of double points. Errors (PreconditionError): "not_strong",
 * "ambiguous_cover" (two orbits on one line, or a moved point on a second
 * orbit line), "uncoverable_fixed_point" (a fixed point on zero or several
 * orbit lines).
 */
CompletionResult sigma_completion(const std::vector<ProjectiveFlat>& lines, const Involution& sigma);

// ---- triple points of B(n,3,A_inf) --------------------------------------------------------

/// B(n,3,A_inf) of the lines viewed as the trace of planes in 3-space.
DiscriminantalArrangement trace_discriminantal(const std::vector<ProjectiveFlat>& lines);

/// Rank-2 flats of multiplicity 3 of B(n,3,A_inf).
std::vector<Flat> triple_point_flats(const DiscriminantalArrangement& b3);

/// No hyperplane contains both flats.
bool independent(const Flat& p, const Flat& q);

/// P is cut out by three hyperplanes, each containing exactly one P_i, and each P_i is hit once.
bool purely_dependent(const Flat& p, const Flat& p1, const Flat& p2, const Flat& p3);

/// sigma maps the index family of the flat onto itself.
bool fixed_by(const DiscriminantalArrangement& b, const Flat& f, const Involution& sigma);

/// {P_ab, P_cd, P_ef} -> the 4-subsets {c,d,e,f}, {a,b,e,f}, {a,b,c,d} (sorted). Needs exactly 3 points.
std::vector<Subset> collinearity_flat(const Collinearity& c);

/// Size of a largest pairwise independent family among the given flats.
std::size_t max_independent(const std::vector<Flat>& flats);

/// Triple-point flats P for which some pairwise independent (P1,P2,P3) makes P purely dependent.
std::vector<Flat> purely_dependent_flats(const std::vector<Flat>& triple_points);

// ---- Pappus configurations ---------------------------------------------------------------

/*
 * A_i = frame_a + u_i * center on carrier a, B_j = frame_b + v_j * center on
 * carrier b, where center = a ∩ b. The six lines are, in order,
 * A1B2, A1B3, A2B1, A2B3, A3B1, A3B2; with that order the classical
 * collinearities are {P12,P34,P56} (carrier a), {P16,P24,P35} (carrier b) and
 * {P13,P25,P46} (the Pappus line).
 */
struct PappusFamily {
    Vector frame_a{1, 0, 0};
    Vector frame_b{0, 1, 0};
    Vector center{0, 0, 1};
    /// u_1, u_2, u_3, v_1, v_2, v_3.
    std::array<Scalar, 6> params{};

    friend bool operator==(const PappusFamily&, const PappusFamily&) = default;
};

/// Shipped starting points for the tuners.
PappusFamily default_pappus_family();
PappusFamily default_pappus_c_family();
/// Carriers y = 0 and y = 1, meeting at infinity.
PappusFamily parallel_pappus_family();

/// Raw (uncanonicalized) homogeneous coordinates; polynomial in the parameters.
std::vector<Vector> pappus_raw_lines(const PappusFamily& f);
/// The three classical axes: join(P12,P34), join(P16,P24), join(P13,P25), raw.
std::array<Vector, 3> pappus_raw_axes(const PappusFamily& f);

/// The six lines as the trace arrangement (k = 3, labels l1..l6). Throws PreconditionError("degenerate_parameters").
Arrangement pappus_generator(const PappusFamily& f);

/// True iff the three classical axes meet in one (possibly infinite) point.
bool axes_concurrent(const PappusFamily& f);
/// True iff the σ3-fixed double points P16, P25, P34 are collinear.
bool fourth_collinearity(const PappusFamily& f);

/*
 * Solves det(axis1, axis2, axis3) = 0 in params[free_param] exactly: the
 * determinant is a polynomial in that parameter, recovered by exact
 * interpolation, whose rational roots are tested for non-degeneracy. Returns
 * the family unchanged when it already satisfies the condition. Throws
 * PreconditionError("no_rational_solution").
 */
PappusFamily concurrency_tune(const PappusFamily& f, std::size_t free_param);

/*
 * Solves concurrency in params[concurrency_param] and the fourth collinearity
 * in params[fourth_param] simultaneously. The concurrency parameter is
 * eliminated by concurrency_tune at sample points; the resulting univariate
 * function is rebuilt as an exact rational function whose numerator's rational
 * roots are verified.
 */
PappusFamily fourth_collinearity_tune(const PappusFamily& f, std::size_t concurrency_param, std::size_t fourth_param);

// ---- certification ------------------------------------------------------------------------

/// Known extremal values for 12 lines in the real projective plane.
inline constexpr std::size_t kMaxTriplePoints12 = 19;
inline constexpr std::size_t kMinOrdinaryPoints12 = 6;

struct UnionCertificate {
    IncidenceStats stats;
    bool max_triple = false;
    bool min_ordinary = false;
    bool completion_central = false;
    /// B(n,3,A_inf) has a purely dependent triple point fixed by sigma.
    bool purely_dependent_fixed = false;
};

UnionCertificate union_certify(const std::vector<ProjectiveFlat>& lines, const CompletionResult& completion);

struct ClauseReport {
    /// "agree", "disagree", "unknown" or "inapplicable".
    std::string status;
    std::optional<bool> lhs;
    std::optional<bool> rhs;
    std::string note;
};

struct ConjectureReport {
    std::size_t n = 0;
    bool strong = false;
    std::size_t independent_triple_points = 0;
    std::optional<std::size_t> independent_bound;  // known only for n = 6
    bool hypothesis_holds = false;
    std::optional<std::string> completion_error;
    std::optional<UnionCertificate> certificate;
    std::size_t purely_dependent_fixed = 0;
    /// Chart used for the affine completion ("none" or a line label), when a witness was found.
    std::optional<std::string> chart;
    std::size_t completion_flat_multiplicity = 0;
    std::size_t completion_flat_rank = 0;
    ClauseReport clause1;
    ClauseReport clause2;
};

/// Evaluates both sides of each clause on one instance; never asserts the conjecture.
ConjectureReport conjecture_report(const std::vector<ProjectiveFlat>& lines, const Involution& sigma);

}  // namespace discrim

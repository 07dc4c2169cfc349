#include "discrim/planar.hpp"

#include "discrim/combinatorics.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <set>

namespace discrim {

namespace {

std::atomic<std::uint64_t> g_census_checks{0};

void require_plane_vector(std::span<const Scalar> v) {
    if (v.size() != 3) throw std::invalid_argument("projective plane elements have 3 coordinates");
}

}  // namespace

Vector cross(std::span<const Scalar> x, std::span<const Scalar> y) {
    require_plane_vector(x);
    require_plane_vector(y);
    return {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
}

ProjectiveFlat join(std::span<const Scalar> x, std::span<const Scalar> y) {
    Vector c = cross(x, y);
    if (is_zero(c)) throw std::invalid_argument("join of coincident projective elements");
    return canonical_projective(c);
}

bool incident(std::span<const Scalar> line, std::span<const Scalar> point) { return dot(line, point).is_zero(); }

bool concurrent(const std::vector<ProjectiveFlat>& lines) {
    if (lines.size() < 3) return true;
    return rank(Matrix::from_rows(lines, 3)) <= 2;
}

std::vector<ProjectiveFlat> homogenize(const Arrangement& a) {
    if (a.dimension() != 2) throw PreconditionError("requires_k2", "homogenize expects lines in the plane");
    std::vector<ProjectiveFlat> out;
    for (const Hyperplane& h : a.hyperplanes()) {
        const Vector v{h.normal[0], h.normal[1], -h.offset};
        out.push_back(canonical_projective(v));
    }
    return out;
}

std::vector<ProjectiveFlat> planar_lines(const Arrangement& a) {
    if (a.dimension() == 2) return homogenize(a);
    if (a.dimension() == 3) return trace_at_infinity(a);
    throw PreconditionError("bad_dimension", "planar line arrangements come from k = 2 or k = 3 input");
}

Arrangement dehomogenize(const std::vector<ProjectiveFlat>& lines, const std::vector<std::string>& labels,
                         Field field) {
    if (labels.size() != lines.size()) throw std::invalid_argument("dehomogenize: label count mismatch");
    std::vector<Hyperplane> hs;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const ProjectiveFlat& l = lines[i];
        if (l[0].is_zero() && l[1].is_zero())
            throw PreconditionError("line_at_infinity", "line " + labels[i] + " is the line at infinity of the chart",
                                    {i});
        hs.push_back({{l[0], l[1]}, -l[2], labels[i]});
    }
    return Arrangement(2, field, std::move(hs));
}

std::vector<ProjectiveFlat> change_chart(const std::vector<ProjectiveFlat>& lines, const ProjectiveFlat& at_infinity) {
    require_plane_vector(at_infinity);
    // Rows of T are the new coordinate forms; the last one is the chart line.
    Matrix t(3, 3);
    bool found = false;
    for (std::size_t i = 0; i < 3 && !found; ++i) {
        for (std::size_t j = i + 1; j < 3 && !found; ++j) {
            Matrix cand(3, 3);
            cand(0, i) = 1;
            cand(1, j) = 1;
            for (std::size_t c = 0; c < 3; ++c) cand(2, c) = at_infinity[c];
            if (!det(cand).is_zero()) {
                t = cand;
                found = true;
            }
        }
    }
    if (!found) throw std::invalid_argument("change_chart: zero chart line");
    Matrix tt(3, 3);
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) tt(r, c) = t(c, r);
    std::vector<ProjectiveFlat> out;
    out.reserve(lines.size());
    for (const ProjectiveFlat& m : lines) {
        auto sol = solution_space(tt, m);
        out.push_back(canonical_projective(sol->basepoint));
    }
    return out;
}

IncidenceStats incidence_stats(const std::vector<ProjectiveFlat>& lines) {
    std::vector<ProjectiveFlat> canon;
    canon.reserve(lines.size());
    std::set<Vector, VectorKeyLess> seen;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        canon.push_back(canonical_projective(lines[i]));
        if (!seen.insert(canon.back()).second)
            throw PreconditionError("duplicate_line", "line " + std::to_string(i + 1) + " repeats an earlier line", {i});
    }
    std::map<Vector, std::set<std::size_t>, VectorKeyLess> points;
    for (std::size_t i = 0; i < canon.size(); ++i) {
        for (std::size_t j = i + 1; j < canon.size(); ++j) {
            auto& s = points[join(canon[i], canon[j])];
            s.insert(i);
            s.insert(j);
        }
    }
    IncidenceStats st;
    st.lines = canon.size();
    std::uint64_t weighted = 0;
    for (auto& [p, ls] : points) {
        st.points.push_back({p, std::vector<std::size_t>(ls.begin(), ls.end())});
        ++st.t[ls.size()];
        weighted += binomial(ls.size(), 2);
    }
    if (weighted != binomial(st.lines, 2))
        throw std::logic_error("incidence census violates sum t_k C(k,2) = C(s,2)");
    g_census_checks.fetch_add(1, std::memory_order_relaxed);
    return st;
}

std::uint64_t census_identity_checks() { return g_census_checks.load(std::memory_order_relaxed); }

ProjectiveFlat double_point(const std::vector<ProjectiveFlat>& lines, IndexPair p) {
    return join(lines.at(p.first), lines.at(p.second));
}

std::vector<Collinearity> collinearity_conditions(const std::vector<ProjectiveFlat>& lines) {
    const std::size_t n = lines.size();
    std::vector<IndexPair> pairs;
    std::vector<ProjectiveFlat> pts;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            pairs.emplace_back(i, j);
            pts.push_back(double_point(lines, {i, j}));
        }
    }
    for (std::size_t p = 0; p < pts.size(); ++p) {
        for (std::size_t l = 0; l < n; ++l) {
            if (l != pairs[p].first && l != pairs[p].second && incident(lines[l], pts[p]))
                throw PreconditionError("not_generic", "three input lines are concurrent",
                                        {pairs[p].first, pairs[p].second, l});
        }
    }
    std::map<Vector, std::set<IndexPair>, VectorKeyLess> carriers;
    for (std::size_t p = 0; p < pts.size(); ++p) {
        for (std::size_t q = p + 1; q < pts.size(); ++q) {
            const auto [a, b] = pairs[p];
            const auto [c, d] = pairs[q];
            if (a == c || a == d || b == c || b == d) continue;
            auto& s = carriers[join(pts[p], pts[q])];
            s.insert(pairs[p]);
            s.insert(pairs[q]);
        }
    }
    std::vector<Collinearity> out;
    for (auto& [axis, s] : carriers) {
        if (s.size() >= 3) out.push_back({axis, std::vector<IndexPair>(s.begin(), s.end())});
    }
    std::sort(out.begin(), out.end(), [](const Collinearity& x, const Collinearity& y) { return x.points < y.points; });
    return out;
}

Arrangement realize_translate(const Arrangement& a, const DiscriminantalArrangement& b, const Flat& x,
                              std::uint64_t seed) {
    if (a.dimension() != 2 || b.k() != 2 || a.size() != b.n())
        throw PreconditionError("requires_k2", "realize_translate expects a line arrangement and its B(n,2,A)");
    const std::size_t n = b.n();
    Matrix m = Matrix::from_rows(x.subspace.basis(), n);
    const Vector zero(x.subspace.dimension());
    const std::vector<Vector> basis = solution_space(m, zero)->basis;

    std::vector<std::size_t> excluded;
    for (std::size_t i = 0, j = 0; i < b.size(); ++i) {
        while (j < x.indices.size() && x.indices[j] < i) ++j;
        if (j < x.indices.size() && x.indices[j] == i) continue;
        excluded.push_back(i);
    }

    std::mt19937_64 rng(seed);
    long bound = 1;
    while (true) {
        for (int attempt = 0; attempt < 32; ++attempt) {
            std::uniform_int_distribution<long> coef(-bound, bound);
            Vector c(n);
            for (const Vector& v : basis) {
                const Scalar z(coef(rng));
                if (z.is_zero()) continue;
                for (std::size_t i = 0; i < n; ++i) c[i] += z * v[i];
            }
            const bool clear = std::all_of(excluded.begin(), excluded.end(),
                                           [&](std::size_t e) { return !dot(b[e].alpha, c).is_zero(); });
            if (!clear) continue;
            Vector shift(n);
            for (std::size_t i = 0; i < n; ++i) shift[i] = c[i] - a[i].offset;
            return translate(a, shift);
        }
        if (bound > (1L << 40)) throw std::logic_error("realize_translate: sampling did not terminate");
        bound *= 2;
    }
}

std::vector<QuadrilateralTranslate> quadrilateral_translates(const Arrangement& a, std::uint64_t seed) {
    if (a.size() != 6 || a.dimension() != 2)
        throw PreconditionError("requires_six_lines", "quadrilateral sets are defined for six lines in the plane");
    const DiscriminantalArrangement b = build_discriminantal(a);
    const Lattice lat = flats_up_to_rank(b, 3);
    const SimplicityOracle oracle(b);
    std::vector<QuadrilateralTranslate> out;
    for (const auto& rep : classify(b, oracle, lat.by_rank[3])) {
        if (rep.simple && rep.flat.multiplicity() == 4) out.push_back({rep.flat, realize_translate(a, b, rep.flat, seed)});
    }
    return out;
}

}  // namespace discrim

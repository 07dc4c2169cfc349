#include "discrim/completion.hpp"

#include "discrim/combinatorics.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>

namespace discrim {

// ---- involutions ---------------------------------------------------------------------------

Involution::Involution(std::vector<IndexPair> transpositions, std::size_t n) : n_(n) {
    image_.resize(n);
    for (std::size_t i = 0; i < n; ++i) image_[i] = i;
    std::vector<bool> used(n, false);
    for (auto& [a, b] : transpositions) {
        if (a > b) std::swap(a, b);
        if (b >= n || a == b || used[a] || used[b])
            throw PreconditionError("bad_sigma", "transpositions must be disjoint pairs of distinct indices in [n]");
        used[a] = used[b] = true;
        image_[a] = b;
        image_[b] = a;
    }
    std::sort(transpositions.begin(), transpositions.end());
    pairs_ = std::move(transpositions);
}

Involution Involution::parse(const std::string& text, std::size_t n) {
    std::vector<IndexPair> pairs;
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto number = [&]() -> std::size_t {
        skip();
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos)
            throw PreconditionError("bad_sigma", "expected a line label at column " + std::to_string(pos + 1));
        const std::size_t v = std::stoul(text.substr(start, pos - start));
        if (v == 0 || v > n)
            throw PreconditionError("bad_sigma", "label " + std::to_string(v) + " outside 1.." + std::to_string(n));
        return v - 1;
    };
    skip();
    while (pos < text.size()) {
        if (text[pos] != '(')
            throw PreconditionError("bad_sigma", "expected '(' at column " + std::to_string(pos + 1));
        ++pos;
        const std::size_t a = number();
        skip();
        if (pos < text.size() && text[pos] == ',') ++pos;
        const std::size_t b = number();
        skip();
        if (pos >= text.size() || text[pos] != ')')
            throw PreconditionError("bad_sigma", "only transpositions are allowed; expected ')' at column " +
                                                     std::to_string(pos + 1));
        ++pos;
        pairs.emplace_back(a, b);
        skip();
    }
    return Involution(std::move(pairs), n);
}

IndexPair Involution::operator()(IndexPair p) const {
    std::size_t a = (*this)(p.first), b = (*this)(p.second);
    if (a > b) std::swap(a, b);
    return {a, b};
}

Subset Involution::operator()(const Subset& s) const {
    Subset out;
    out.reserve(s.size());
    for (std::size_t i : s) out.push_back((*this)(i));
    std::sort(out.begin(), out.end());
    return out;
}

std::string Involution::to_string() const {
    if (pairs_.empty()) return "()";
    std::ostringstream os;
    for (auto [a, b] : pairs_) os << '(' << a + 1 << ' ' << b + 1 << ')';
    return os.str();
}

std::vector<Involution> all_involutions(std::size_t n) {
    std::vector<std::vector<IndexPair>> acc{{}};
    // Extend by transpositions in increasing order to list each product once.
    std::function<void(std::vector<IndexPair>&, std::vector<bool>&, std::size_t)> grow =
        [&](std::vector<IndexPair>& cur, std::vector<bool>& used, std::size_t from) {
            for (std::size_t a = from; a < n; ++a) {
                if (used[a]) continue;
                for (std::size_t b = a + 1; b < n; ++b) {
                    if (used[b]) continue;
                    used[a] = used[b] = true;
                    cur.emplace_back(a, b);
                    acc.push_back(cur);
                    grow(cur, used, a + 1);
                    cur.pop_back();
                    used[a] = used[b] = false;
                }
            }
        };
    std::vector<IndexPair> cur;
    std::vector<bool> used(n, false);
    grow(cur, used, 0);
    std::sort(acc.begin(), acc.end());
    std::vector<Involution> out;
    out.reserve(acc.size());
    for (auto& p : acc) out.emplace_back(std::move(p), n);
    return out;
}

bool acts_strongly(const Involution& sigma, const std::vector<Collinearity>& collinearities) {
    for (const Collinearity& c : collinearities) {
        for (IndexPair p : c.points) {
            if (!std::binary_search(c.points.begin(), c.points.end(), sigma(p))) return false;
        }
    }
    return true;
}

std::vector<Involution> strong_involutions(const std::vector<ProjectiveFlat>& lines) {
    const auto cs = collinearity_conditions(lines);
    if (cs.empty()) throw PreconditionError("no_collinearities", "the arrangement satisfies no collinearity condition");
    std::vector<Involution> out;
    for (Involution& s : all_involutions(lines.size())) {
        if (!s.is_identity() && acts_strongly(s, cs)) out.push_back(std::move(s));
    }
    return out;
}

CompletionResult sigma_completion(const std::vector<ProjectiveFlat>& lines, const Involution& sigma) {
    const std::size_t n = lines.size();
    if (sigma.degree() != n) throw PreconditionError("bad_sigma", "permutation degree differs from the line count");
    const auto cs = collinearity_conditions(lines);
    if (cs.empty()) throw PreconditionError("no_collinearities", "the arrangement satisfies no collinearity condition");
    if (!acts_strongly(sigma, cs))
        throw PreconditionError("not_strong", sigma.to_string() + " does not preserve every collinearity");

    CompletionResult res;
    res.sigma = sigma;
    std::vector<IndexPair> fixed;
    std::vector<std::pair<IndexPair, IndexPair>> orbits;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const IndexPair p{i, j};
            const IndexPair q = sigma(p);
            if (q == p) fixed.push_back(p);
            else if (p < q) orbits.emplace_back(p, q);
        }
    }
    std::map<IndexPair, ProjectiveFlat> points;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) points[{i, j}] = double_point(lines, {i, j});

    for (const auto& [p, q] : orbits) {
        ProjectiveFlat l = join(points[p], points[q]);
        for (std::size_t k = 0; k < res.lines.size(); ++k) {
            if (res.lines[k] == l)
                throw PreconditionError("ambiguous_cover", "two orbits of double points span the same line",
                                        {p.first, p.second, q.first, q.second});
        }
        res.orbit_map[p] = res.lines.size();
        res.orbit_map[q] = res.lines.size();
        res.lines.push_back(std::move(l));
    }
    for (const auto& [p, q] : orbits) {
        for (IndexPair x : {p, q}) {
            for (std::size_t k = 0; k < res.lines.size(); ++k) {
                if (k != res.orbit_map[x] && incident(res.lines[k], points[x]))
                    throw PreconditionError("ambiguous_cover", "a double point lies on two completion lines",
                                            {x.first, x.second});
            }
        }
    }
    for (IndexPair p : fixed) {
        std::vector<std::size_t> through;
        for (std::size_t k = 0; k < res.lines.size(); ++k)
            if (incident(res.lines[k], points[p])) through.push_back(k);
        if (through.size() != 1)
            throw PreconditionError("uncoverable_fixed_point",
                                    "fixed double point lies on " + std::to_string(through.size()) +
                                        " completion lines",
                                    {p.first, p.second});
        res.orbit_map[p] = through.front();
    }
    std::vector<std::size_t> load(res.lines.size(), 0);
    for (const auto& [p, k] : res.orbit_map) ++load[k];
    for (std::size_t k = 0; k < load.size(); ++k)
        if (load[k] >= 3) res.axes.push_back(k);
    return res;
}

// ---- triple points -------------------------------------------------------------------------

DiscriminantalArrangement trace_discriminantal(const std::vector<ProjectiveFlat>& lines) {
    Field field;
    for (const auto& l : lines)
        for (const Scalar& s : l)
            if (!s.is_rational()) field.radicand = s.radicand();
    return build_discriminantal(Arrangement::from_normals(3, lines, field));
}

std::vector<Flat> triple_point_flats(const DiscriminantalArrangement& b3) {
    if (b3.k() != 3) throw PreconditionError("requires_k3", "triple points live in B(n,3,A_inf)");
    std::vector<Flat> out;
    Lattice lat = flats_up_to_rank(b3, 2);
    for (Flat& f : lat.by_rank[2])
        if (f.multiplicity() == 3) out.push_back(std::move(f));
    return out;
}

bool independent(const Flat& p, const Flat& q) {
    std::vector<std::size_t> common;
    std::set_intersection(p.indices.begin(), p.indices.end(), q.indices.begin(), q.indices.end(),
                          std::back_inserter(common));
    return common.empty();
}

bool purely_dependent(const Flat& p, const Flat& p1, const Flat& p2, const Flat& p3) {
    if (p.multiplicity() != 3) return false;
    const Flat* parts[3] = {&p1, &p2, &p3};
    for (const Flat* q : parts)
        if (q->indices == p.indices) return false;
    std::vector<bool> hit(3, false);
    for (std::size_t h : p.indices) {
        std::size_t owner = 3, count = 0;
        for (std::size_t i = 0; i < 3; ++i) {
            if (std::binary_search(parts[i]->indices.begin(), parts[i]->indices.end(), h)) {
                owner = i;
                ++count;
            }
        }
        if (count != 1 || hit[owner]) return false;
        hit[owner] = true;
    }
    return true;
}

bool fixed_by(const DiscriminantalArrangement& b, const Flat& f, const Involution& sigma) {
    for (std::size_t i : f.indices) {
        const std::size_t j = b.index_of(sigma(b[i].subset));
        if (!std::binary_search(f.indices.begin(), f.indices.end(), j)) return false;
    }
    return true;
}

std::vector<Subset> collinearity_flat(const Collinearity& c) {
    if (c.points.size() != 3)
        throw PreconditionError("bad_collinearity", "a collinearity flat needs exactly three double points");
    std::set<std::size_t> used;
    for (auto [i, j] : c.points) used.insert({i, j});
    if (used.size() != 6) throw PreconditionError("bad_collinearity", "the three double points must be disjoint");
    std::vector<Subset> out;
    for (std::size_t skip = 0; skip < 3; ++skip) {
        Subset s;
        for (std::size_t i = 0; i < 3; ++i) {
            if (i == skip) continue;
            s.push_back(c.points[i].first);
            s.push_back(c.points[i].second);
        }
        std::sort(s.begin(), s.end());
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t max_independent(const std::vector<Flat>& flats) {
    const std::size_t m = flats.size();
    std::vector<std::vector<bool>> ok(m, std::vector<bool>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) ok[i][j] = i != j && independent(flats[i], flats[j]);
    std::size_t best = 0;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> grow = [&](std::size_t from) {
        best = std::max(best, cur.size());
        for (std::size_t i = from; i < m; ++i) {
            if (std::all_of(cur.begin(), cur.end(), [&](std::size_t c) { return ok[c][i]; })) {
                cur.push_back(i);
                grow(i + 1);
                cur.pop_back();
            }
        }
    };
    grow(0);
    return best;
}

std::vector<Flat> purely_dependent_flats(const std::vector<Flat>& triple_points) {
    const std::size_t m = triple_points.size();
    std::vector<Flat> out;
    for (std::size_t p = 0; p < m; ++p) {
        bool found = false;
        for (std::size_t a = 0; a < m && !found; ++a) {
            for (std::size_t b = a + 1; b < m && !found; ++b) {
                if (!independent(triple_points[a], triple_points[b])) continue;
                for (std::size_t c = b + 1; c < m && !found; ++c) {
                    if (!independent(triple_points[a], triple_points[c]) ||
                        !independent(triple_points[b], triple_points[c]))
                        continue;
                    found = purely_dependent(triple_points[p], triple_points[a], triple_points[b], triple_points[c]);
                }
            }
        }
        if (found) out.push_back(triple_points[p]);
    }
    return out;
}

// ---- Pappus --------------------------------------------------------------------------------

namespace {

constexpr std::size_t kPappusLines[6][2] = {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}};

Vector add_scaled(const Vector& base, const Scalar& t, const Vector& dir) {
    Vector out(3);
    for (std::size_t i = 0; i < 3; ++i) out[i] = base[i] + t * dir[i];
    return out;
}

Scalar det3(const Vector& x, const Vector& y, const Vector& z) { return dot(x, cross(y, z)); }

std::array<Vector, 3> raw_points(const std::vector<Vector>& l, const int (&idx)[3][2]) {
    std::array<Vector, 3> out;
    for (std::size_t i = 0; i < 3; ++i) out[i] = cross(l[idx[i][0]], l[idx[i][1]]);
    return out;
}

void require_rational_family(const PappusFamily& f) {
    auto check = [](const Scalar& s) {
        if (!s.is_rational())
            throw PreconditionError("irrational_family", "exact tuning works over Q; the family has an irrational entry");
    };
    for (const Scalar& s : f.params) check(s);
    for (const Vector* v : {&f.frame_a, &f.frame_b, &f.center})
        for (const Scalar& s : *v) check(s);
}

// Polynomials over Q, coefficient i multiplies t^i.
using Poly = std::vector<mpq_class>;

void trim(Poly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

mpq_class eval(const Poly& p, const mpq_class& t) {
    mpq_class acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
    return acc;
}

// Newton divided differences at the nodes, expanded into the monomial basis.
Poly interpolate(const std::vector<mpq_class>& xs, std::vector<mpq_class> ys) {
    const std::size_t m = xs.size();
    for (std::size_t level = 1; level < m; ++level)
        for (std::size_t i = m - 1; i >= level; --i) ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - level]);
    Poly p{ys[m - 1]};
    for (std::size_t i = m - 1; i-- > 0;) {
        // p = p * (t - xs[i]) + ys[i]
        Poly next(p.size() + 1);
        for (std::size_t c = 0; c < p.size(); ++c) {
            next[c + 1] += p[c];
            next[c] -= p[c] * xs[i];
        }
        next[0] += ys[i];
        p = std::move(next);
    }
    trim(p);
    return p;
}

std::vector<mpz_class> divisors(mpz_class v) {
    v = abs(v);
    std::vector<std::pair<mpz_class, unsigned>> factors;
    for (mpz_class d = 2; d * d <= v && d < 1000000; ++d) {
        unsigned e = 0;
        while (v % d == 0) {
            v /= d;
            ++e;
        }
        if (e) factors.emplace_back(d, e);
    }
    if (v > 1) {
        if (v >= mpz_class(1000000) * mpz_class(1000000) && mpz_probab_prime_p(v.get_mpz_t(), 30) == 0)
            throw PreconditionError("coefficients_too_large", "cannot factor a polynomial coefficient for root search");
        factors.emplace_back(v, 1);
    }
    std::vector<mpz_class> out{1};
    for (const auto& [p, e] : factors) {
        const std::size_t base = out.size();
        mpz_class pw = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pw *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pw);
        }
    }
    return out;
}

// Distinct rational roots, ascending.
std::vector<mpq_class> rational_roots(Poly p) {
    trim(p);
    std::set<mpq_class> roots;
    if (p.empty()) return {};
    std::size_t low = 0;
    while (sgn(p[low]) == 0) ++low;
    if (low > 0) {
        roots.insert(0);
        p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(low));
    }
    if (p.size() > 1) {
        mpz_class lcm = 1;
        for (const auto& c : p) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
        std::vector<mpz_class> z;
        for (const auto& c : p) z.push_back(mpz_class(c * lcm));
        for (const mpz_class& num : divisors(z.front())) {
            for (const mpz_class& den : divisors(z.back())) {
                for (int s : {1, -1}) {
                    mpq_class cand(num * s, den);
                    cand.canonicalize();
                    if (sgn(eval(p, cand)) == 0) roots.insert(cand);
                }
            }
        }
    }
    return {roots.begin(), roots.end()};
}

bool valid_family(const PappusFamily& f) {
    try {
        pappus_generator(f);
        return true;
    } catch (const PreconditionError&) {
        return false;
    }
}

// Roots ordered by distance to the current value, then by value.
void order_by_distance(std::vector<mpq_class>& roots, const mpq_class& current) {
    std::stable_sort(roots.begin(), roots.end(), [&](const mpq_class& x, const mpq_class& y) {
        const mpq_class dx = abs(x - current), dy = abs(y - current);
        return dx != dy ? dx < dy : x < y;
    });
}

mpq_class concurrency_value(PappusFamily f, std::size_t i, const mpq_class& t) {
    f.params[i] = Scalar(t);
    const auto ax = pappus_raw_axes(f);
    return det3(ax[0], ax[1], ax[2]).rational_part();
}

mpq_class fourth_value(const PappusFamily& f) {
    const auto l = pappus_raw_lines(f);
    static const int idx[3][2] = {{0, 5}, {1, 4}, {2, 3}};
    const auto p = raw_points(l, idx);
    return det3(p[0], p[1], p[2]).rational_part();
}

}  // namespace

PappusFamily default_pappus_family() {
    PappusFamily f;
    f.params = {Scalar(1), Scalar(2), Scalar(4), Scalar(2), Scalar(3), Scalar(7)};
    return f;
}

PappusFamily default_pappus_c_family() {
    PappusFamily f;
    f.params = {Scalar(1), Scalar(5), Scalar(3), Scalar(2), Scalar(3), Scalar(7)};
    return f;
}

PappusFamily parallel_pappus_family() {
    PappusFamily f;
    f.frame_a = {0, 0, 1};
    f.frame_b = {0, 1, 1};
    f.center = {1, 0, 0};
    f.params = {Scalar(0), Scalar(1), Scalar(3), Scalar(1), Scalar(2), Scalar(5)};
    return f;
}

std::vector<Vector> pappus_raw_lines(const PappusFamily& f) {
    std::array<Vector, 3> a, b;
    for (std::size_t i = 0; i < 3; ++i) {
        a[i] = add_scaled(f.frame_a, f.params[i], f.center);
        b[i] = add_scaled(f.frame_b, f.params[3 + i], f.center);
    }
    std::vector<Vector> out;
    for (const auto& ab : kPappusLines) out.push_back(cross(a[ab[0]], b[ab[1]]));
    return out;
}

std::array<Vector, 3> pappus_raw_axes(const PappusFamily& f) {
    const auto l = pappus_raw_lines(f);
    static const int pts[6][2] = {{0, 1}, {2, 3}, {0, 5}, {1, 3}, {0, 2}, {1, 4}};
    std::array<Vector, 3> out;
    for (std::size_t i = 0; i < 3; ++i)
        out[i] = cross(cross(l[pts[2 * i][0]], l[pts[2 * i][1]]), cross(l[pts[2 * i + 1][0]], l[pts[2 * i + 1][1]]));
    return out;
}

Arrangement pappus_generator(const PappusFamily& f) {
    for (const Vector* v : {&f.frame_a, &f.frame_b, &f.center})
        if (v->size() != 3) throw PreconditionError("degenerate_parameters", "frame points need 3 coordinates");
    if (det3(f.frame_a, f.frame_b, f.center).is_zero())
        throw PreconditionError("degenerate_parameters", "frame points are collinear");
    for (std::size_t g = 0; g < 2; ++g)
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j)
                if (f.params[3 * g + i] == f.params[3 * g + j])
                    throw PreconditionError("degenerate_parameters", "two points on one carrier coincide",
                                            {3 * g + i, 3 * g + j});
    Field field;
    std::vector<Hyperplane> hs;
    const auto raw = pappus_raw_lines(f);
    for (std::size_t i = 0; i < raw.size(); ++i) {
        for (const Scalar& s : raw[i])
            if (!s.is_rational()) field.radicand = s.radicand();
        hs.push_back({canonical_projective(raw[i]), Scalar(0), "l" + std::to_string(i + 1)});
    }
    Arrangement a(3, field, std::move(hs));
    const auto g = is_generic(a);
    if (!g.generic)
        throw PreconditionError("degenerate_parameters", "the six lines are not in general position", g.witness);
    return a;
}

bool axes_concurrent(const PappusFamily& f) {
    const auto ax = pappus_raw_axes(f);
    return det3(ax[0], ax[1], ax[2]).is_zero();
}

bool fourth_collinearity(const PappusFamily& f) { return sgn(fourth_value(f)) == 0; }

PappusFamily concurrency_tune(const PappusFamily& f, std::size_t free_param) {
    if (free_param >= 6) throw std::out_of_range("concurrency_tune: parameter index is 0..5");
    require_rational_family(f);
    const mpq_class current = f.params[free_param].rational_part();
    if (axes_concurrent(f) && valid_family(f)) return f;

    // Each axis is quartic in one parameter, so the determinant has degree <= 12.
    std::vector<mpq_class> xs, ys;
    for (long t = 0; t <= 12; ++t) {
        xs.emplace_back(t);
        ys.push_back(concurrency_value(f, free_param, xs.back()));
    }
    const Poly p = interpolate(xs, ys);
    for (long t : {-1L, -2L, 13L})
        if (eval(p, t) != concurrency_value(f, free_param, t))
            throw std::logic_error("concurrency determinant exceeded its degree bound");
    if (p.empty()) {
        if (valid_family(f)) return f;
        throw PreconditionError("no_rational_solution", "concurrency holds identically but the family is degenerate");
    }
    auto roots = rational_roots(p);
    order_by_distance(roots, current);
    for (const mpq_class& r : roots) {
        PappusFamily g = f;
        g.params[free_param] = Scalar(r);
        if (valid_family(g) && axes_concurrent(g)) return g;
    }
    throw PreconditionError("no_rational_solution",
                            "no non-degenerate rational value of parameter " + std::to_string(free_param + 1) +
                                " makes the axes concurrent");
}

PappusFamily fourth_collinearity_tune(const PappusFamily& f, std::size_t concurrency_param, std::size_t fourth_param) {
    if (concurrency_param >= 6 || fourth_param >= 6 || concurrency_param == fourth_param)
        throw std::out_of_range("fourth_collinearity_tune: need two distinct parameter indices in 0..5");
    require_rational_family(f);
    const mpq_class current = f.params[fourth_param].rational_part();

    // Samples of s -> g(s) = fourth-collinearity determinant after eliminating the concurrency parameter.
    constexpr std::size_t kMaxDegree = 12;
    constexpr std::size_t kSamples = 2 * kMaxDegree + 6;
    std::vector<mpq_class> xs, ys;
    for (long s = 0; xs.size() < kSamples && s < 200; ++s) {
        PappusFamily g = f;
        g.params[fourth_param] = Scalar(s);
        try {
            g = concurrency_tune(g, concurrency_param);
        } catch (const PreconditionError&) {
            continue;
        }
        xs.emplace_back(s);
        ys.push_back(fourth_value(g));
    }
    if (xs.size() < kSamples) throw PreconditionError("no_rational_solution", "too few non-degenerate samples");

    auto finish = [&](std::vector<mpq_class> roots) {
        order_by_distance(roots, current);
        for (const mpq_class& r : roots) {
            PappusFamily g = f;
            g.params[fourth_param] = Scalar(r);
            try {
                g = concurrency_tune(g, concurrency_param);
            } catch (const PreconditionError&) {
                continue;
            }
            if (valid_family(g) && axes_concurrent(g) && fourth_collinearity(g)) return g;
        }
        throw PreconditionError("no_rational_solution",
                                "no non-degenerate rational parameters satisfy both conditions");
    };
    if (std::all_of(ys.begin(), ys.end(), [](const mpq_class& y) { return sgn(y) == 0; }))
        return finish({current});

    // Smallest d with N(s_k) - g_k M(s_k) = 0 solvable, deg N, deg M <= d.
    for (std::size_t d = 0; d <= kMaxDegree; ++d) {
        const std::size_t cols = 2 * (d + 1);
        Matrix m(xs.size(), cols);
        for (std::size_t k = 0; k < xs.size(); ++k) {
            mpq_class pw = 1;
            for (std::size_t e = 0; e <= d; ++e) {
                m(k, e) = Scalar(pw);
                m(k, d + 1 + e) = Scalar(mpq_class(-ys[k] * pw));
                pw *= xs[k];
            }
        }
        const auto sol = solution_space(m, Vector(xs.size()));
        if (sol->basis.empty()) continue;
        const Vector& v = sol->basis.front();
        Poly num, den;
        for (std::size_t e = 0; e <= d; ++e) {
            num.push_back(v[e].rational_part());
            den.push_back(v[d + 1 + e].rational_part());
        }
        trim(den);
        if (den.empty()) continue;
        return finish(rational_roots(num));
    }
    throw PreconditionError("no_rational_solution", "the eliminated condition is not a low-degree rational function");
}

// ---- certification -------------------------------------------------------------------------

namespace {

std::size_t count_fixed_purely_dependent(const std::vector<ProjectiveFlat>& lines, const Involution& sigma,
                                         std::size_t* independent_count) {
    const auto b3 = trace_discriminantal(lines);
    const auto tps = triple_point_flats(b3);
    if (independent_count) *independent_count = max_independent(tps);
    std::size_t count = 0;
    for (const Flat& p : purely_dependent_flats(tps))
        if (fixed_by(b3, p, sigma)) ++count;
    return count;
}

ClauseReport compare(std::optional<bool> lhs, std::optional<bool> rhs, std::string note) {
    ClauseReport c;
    c.lhs = lhs;
    c.rhs = rhs;
    c.note = std::move(note);
    if (!lhs || !rhs) c.status = "unknown";
    else c.status = *lhs == *rhs ? "agree" : "disagree";
    return c;
}

}  // namespace

UnionCertificate union_certify(const std::vector<ProjectiveFlat>& lines, const CompletionResult& completion) {
    std::vector<ProjectiveFlat> all = lines;
    all.insert(all.end(), completion.lines.begin(), completion.lines.end());
    UnionCertificate c;
    c.stats = incidence_stats(all);
    const bool twelve = c.stats.lines == 12;
    c.max_triple = twelve && c.stats.count(3) == kMaxTriplePoints12;
    c.min_ordinary = twelve && c.stats.count(2) == kMinOrdinaryPoints12;
    c.completion_central = concurrent(completion.lines);
    c.purely_dependent_fixed = count_fixed_purely_dependent(lines, completion.sigma, nullptr) > 0;
    return c;
}

ConjectureReport conjecture_report(const std::vector<ProjectiveFlat>& lines, const Involution& sigma) {
    ConjectureReport r;
    r.n = lines.size();
    if (r.n == 6) r.independent_bound = 3;
    const auto cs = collinearity_conditions(lines);
    r.strong = !cs.empty() && !sigma.is_identity() && acts_strongly(sigma, cs);
    r.purely_dependent_fixed = count_fixed_purely_dependent(lines, sigma, &r.independent_triple_points);
    r.hypothesis_holds = r.independent_bound && r.independent_triple_points == *r.independent_bound;

    CompletionResult comp;
    try {
        comp = sigma_completion(lines, sigma);
    } catch (const PreconditionError& e) {
        r.completion_error = e.code() + ": " + e.what();
        r.clause1 = {"inapplicable", std::nullopt, std::nullopt, "no sigma-completion: " + e.code()};
        r.clause2 = r.clause1;
        return r;
    }
    try {
        r.certificate = union_certify(lines, comp);
    } catch (const PreconditionError& e) {
        r.completion_error = e.code() + ": " + e.what();
        r.clause1 = {"inapplicable", std::nullopt, std::nullopt, "union is not a simple line set: " + e.code()};
        r.clause2 = r.clause1;
        return r;
    }
    const UnionCertificate& cert = *r.certificate;
    const bool twelve = cert.stats.lines == 12;

    std::optional<bool> l1, l2;
    if (twelve) {
        l1 = cert.min_ordinary;
        l2 = cert.max_triple;
    }
    const bool r1 = r.purely_dependent_fixed > 0 && cert.completion_central;
    r.clause1 = compare(l1, r1, twelve ? "" : "extremal ordinary-point count known only for 12 lines");

    // Clause 2: look for a chart in which A^sigma is a translate on a rank n-3 simple flat.
    std::vector<std::pair<std::string, std::optional<ProjectiveFlat>>> charts{{"none", std::nullopt}};
    for (std::size_t i = 0; i < lines.size(); ++i) charts.emplace_back("l" + std::to_string(i + 1), lines[i]);
    std::optional<bool> r2;
    if (r.n == 6) r2 = false;
    for (const auto& [name, chart] : charts) {
        std::vector<ProjectiveFlat> image = chart ? change_chart(comp.lines, *chart) : comp.lines;
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < image.size(); ++i) labels.push_back("c" + std::to_string(i + 1));
        Field field;
        for (const auto& l : image)
            for (const Scalar& s : l)
                if (!s.is_rational()) field.radicand = s.radicand();
        Arrangement affine;
        try {
            affine = dehomogenize(image, labels, field);
        } catch (const PreconditionError&) {
            continue;
        }
        if (!is_generic(affine).generic || affine.size() <= 2) continue;
        const auto b = build_discriminantal(affine);
        const Vector c = affine.offsets();
        std::vector<std::size_t> t;
        for (std::size_t h = 0; h < b.size(); ++h)
            if (dot(b[h].alpha, c).is_zero()) t.push_back(h);
        if (t.empty()) continue;
        const Flat x = closure(b, t);
        const bool simple = SimplicityOracle(b).is_simple(x);
        if (x.rank + 3 == affine.size() && simple && x.multiplicity() > x.rank) {
            r.chart = name;
            r.completion_flat_multiplicity = x.multiplicity();
            r.completion_flat_rank = x.rank;
            r2 = r.n == 6 ? std::optional<bool>(x.multiplicity() == 4) : std::nullopt;
            break;
        }
    }
    r.clause2 = compare(l2, r2, r.n == 6 ? "" : "maximal simple multiplicity known only for n = 6");
    return r;
}

}  // namespace discrim

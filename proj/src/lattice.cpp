#include "discrim/lattice.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace discrim {

namespace {

void require_k2(const DiscriminantalArrangement& b, const char* what) {
    if (b.k() != 2)
        throw PreconditionError("requires_k2", std::string(what) + " is defined for arrangements of lines (k = 2)");
}

// Fills indices for a flat whose subspace and witness are already set.
void close_indices(const DiscriminantalArrangement& b, Flat& f) {
    f.indices.clear();
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (f.subspace.contains(b[i].alpha)) f.indices.push_back(i);
    }
    f.rank = f.subspace.dimension();
}

}  // namespace

std::vector<Subset> index_family(const DiscriminantalArrangement& b, const Flat& flat) {
    std::vector<Subset> out;
    out.reserve(flat.indices.size());
    for (std::size_t i : flat.indices) out.push_back(b[i].subset);
    return out;
}

Flat closure(const DiscriminantalArrangement& b, const std::vector<std::size_t>& generators) {
    Flat f;
    f.subspace = Subspace(b.n());
    for (std::size_t g : generators) {
        if (g >= b.size()) throw std::out_of_range("closure: hyperplane index out of range");
        if (f.subspace.insert(b[g].alpha)) f.witness.push_back(g);
    }
    close_indices(b, f);
    return f;
}

Flat closure(const DiscriminantalArrangement& b, const std::vector<Subset>& generators) {
    std::vector<std::size_t> idx;
    idx.reserve(generators.size());
    for (const Subset& s : generators) idx.push_back(b.index_of(s));
    return closure(b, idx);
}

Flat flat_of_set(const DiscriminantalArrangement& b, const Subset& k_set) {
    std::vector<std::size_t> idx;
    for_each_k_subset(k_set.size(), b.k() + 1, [&](const Subset& pos) {
        Subset l;
        for (std::size_t p : pos) l.push_back(k_set[p]);
        idx.push_back(b.index_of(l));
        return true;
    });
    return closure(b, idx);
}

Lattice flats_up_to_rank(const DiscriminantalArrangement& b, std::size_t max_rank) {
    if (max_rank > b.n() - b.k())
        throw PreconditionError("rank_too_large", "max rank exceeds n - k = " + std::to_string(b.n() - b.k()));
    Lattice lat;
    Flat top;
    top.subspace = Subspace(b.n());
    lat.by_rank.push_back({top});

    for (std::size_t r = 1; r <= max_rank; ++r) {
        std::map<Subspace, Flat, SubspaceKeyLess> found;
        for (const Flat& parent : lat.by_rank[r - 1]) {
            std::size_t next = 0;  // walks parent.indices, which are sorted
            for (std::size_t h = 0; h < b.size(); ++h) {
                while (next < parent.indices.size() && parent.indices[next] < h) ++next;
                if (next < parent.indices.size() && parent.indices[next] == h) continue;
                Flat child;
                child.subspace = parent.subspace;
                child.subspace.insert(b[h].alpha);
                if (found.contains(child.subspace)) continue;
                child.witness = parent.witness;
                child.witness.push_back(h);
                close_indices(b, child);
                found.emplace(child.subspace, std::move(child));
            }
        }
        std::vector<Flat> level;
        level.reserve(found.size());
        for (auto& [key, f] : found) level.push_back(std::move(f));
        std::sort(level.begin(), level.end(), [](const Flat& x, const Flat& y) { return x.indices < y.indices; });
        lat.by_rank.push_back(std::move(level));
    }
    return lat;
}

bool athanasiadis_predicate(const std::vector<Subset>& family, std::size_t n, std::size_t k) {
    for (std::size_t i = 0; i < family.size(); ++i) {
        const Subset& s = family[i];
        if (s.size() < k + 1)
            throw PreconditionError("small_subset", "every subset must have at least k+1 elements", {i});
        if (std::any_of(s.begin(), s.end(), [n](std::size_t e) { return e >= n; }))
            throw PreconditionError("out_of_range", "subset element outside [n]", {i});
    }
    const std::size_t m = family.size();
    if (m < 2) return true;
    if (m >= 63) throw std::invalid_argument("athanasiadis_predicate: family too large to enumerate");
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
        if (std::popcount(mask) < 2) continue;
        std::vector<bool> in_union(n, false);
        long rhs = static_cast<long>(k);
        for (std::size_t i = 0; i < m; ++i) {
            if (!(mask >> i & 1)) continue;
            rhs += static_cast<long>(family[i].size()) - static_cast<long>(k);
            for (std::size_t e : family[i]) in_union[e] = true;
        }
        const long u = std::count(in_union.begin(), in_union.end(), true);
        if (!(u > rhs)) return false;
    }
    return true;
}

SimplicityOracle::SimplicityOracle(const DiscriminantalArrangement& b) {
    require_k2(b, "simplicity");
    for (std::size_t size = 4; size <= b.n(); ++size) {
        for_each_k_subset(b.n(), size, [&](const Subset& k_set) {
            sets_.emplace_back(k_set, flat_of_set(b, k_set).subspace);
            return true;
        });
    }
}

std::optional<Subset> SimplicityOracle::obstruction(const Flat& x) const {
    for (const auto& [k_set, span] : sets_) {
        if (span.dimension() <= x.subspace.dimension() && x.subspace.contains(span)) return k_set;
    }
    return std::nullopt;
}

bool SimplicityOracle::is_simple(const Flat& x) const { return !obstruction(x).has_value(); }

std::vector<SimpleIntersectionReport> classify(const DiscriminantalArrangement& b, const SimplicityOracle& oracle,
                                               const std::vector<Flat>& flats) {
    require_k2(b, "simple_intersections");
    std::vector<SimpleIntersectionReport> out;
    out.reserve(flats.size());
    for (const Flat& f : flats) {
        SimpleIntersectionReport rep;
        rep.flat = f;
        rep.simple = oracle.is_simple(f);
        rep.non_very_generic = f.multiplicity() > f.rank;
        out.push_back(std::move(rep));
    }
    return out;
}

std::vector<SimpleIntersectionReport> simple_intersections(const DiscriminantalArrangement& b, std::size_t r) {
    require_k2(b, "simple_intersections");
    const Lattice lat = flats_up_to_rank(b, r);
    return classify(b, SimplicityOracle(b), lat.by_rank[r]);
}

VeryGenericReport very_generic_report(const DiscriminantalArrangement& b, std::size_t max_rank) {
    require_k2(b, "very_generic_report");
    const Lattice lat = flats_up_to_rank(b, max_rank);
    const SimplicityOracle oracle(b);
    VeryGenericReport rep;
    for (std::size_t r = 1; r <= max_rank; ++r) {
        for (const auto& c : classify(b, oracle, lat.by_rank[r])) {
            if (c.simple && c.non_very_generic) rep.witnesses.push_back(c.flat);
        }
    }
    rep.very_generic = rep.witnesses.empty();
    return rep;
}

}  // namespace discrim

#include "discrim/orchard.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

namespace discrim {

namespace {

constexpr std::size_t kMaxN = 9;

std::size_t pair_bit(std::size_t a, std::size_t b) { return a * kMaxN + b; }

std::uint64_t pair_mask(const Subset& t) {
    return (std::uint64_t{1} << pair_bit(t[0], t[1])) | (std::uint64_t{1} << pair_bit(t[0], t[2])) |
           (std::uint64_t{1} << pair_bit(t[1], t[2]));
}

// Index-ordered parallel map: workers claim items from a shared counter, results land in their slot.
template <typename T, typename Fn>
auto parallel_map(std::size_t count, Fn fn) {
    std::vector<T> out(count);
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), count));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_lock;
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) {
            try {
                out[i] = fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> g(failure_lock);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

}  // namespace

void validate(const TripleSystem& t) {
    std::uint64_t used = 0;
    for (std::size_t i = 0; i < t.triples.size(); ++i) {
        const Subset& s = t.triples[i];
        if (s.size() != 3 || !std::is_sorted(s.begin(), s.end()) || s[0] == s[1] || s[1] == s[2] || s[2] >= t.n ||
            t.n > kMaxN)
            throw PreconditionError("bad_triple_system", "triples must be sorted 3-subsets of [n], n <= 9", {i});
        const std::uint64_t m = pair_mask(s);
        if (used & m) throw PreconditionError("bad_triple_system", "two triples share a pair", {i});
        used |= m;
    }
}

TripleSystem canonical_form(const TripleSystem& t) {
    std::vector<std::size_t> perm(t.n);
    std::iota(perm.begin(), perm.end(), 0);
    TripleSystem best = t;
    std::sort(best.triples.begin(), best.triples.end());
    do {
        TripleSystem img{t.n, {}};
        for (const Subset& s : t.triples) {
            Subset r{perm[s[0]], perm[s[1]], perm[s[2]]};
            std::sort(r.begin(), r.end());
            img.triples.push_back(std::move(r));
        }
        std::sort(img.triples.begin(), img.triples.end());
        if (img.triples < best.triples) best = std::move(img);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::vector<TripleSystem> enumerate_systems(std::size_t n, std::size_t m, const EnumerationOptions& options) {
    if (n > kMaxN) throw PreconditionError("n_too_large", "triple systems are enumerated for n <= 9");
    const std::vector<Subset> all = k_subsets(n, 3);
    std::vector<std::uint64_t> masks;
    for (const Subset& s : all) masks.push_back(pair_mask(s));

    std::vector<TripleSystem> out;
    std::vector<std::size_t> chosen;
    std::vector<std::size_t> degree(n, 0);
    const std::size_t cap = options.degree_cap.value_or(m);
    auto dfs = [&](auto&& self, std::size_t from, std::uint64_t used) -> void {
        if (chosen.size() == m) {
            TripleSystem t{n, {}};
            for (std::size_t c : chosen) t.triples.push_back(all[c]);
            out.push_back(std::move(t));
            return;
        }
        for (std::size_t i = from; i + (m - chosen.size()) <= all.size(); ++i) {
            if (used & masks[i]) continue;
            const Subset& s = all[i];
            if (degree[s[0]] >= cap || degree[s[1]] >= cap || degree[s[2]] >= cap) continue;
            for (std::size_t e : s) ++degree[e];
            chosen.push_back(i);
            self(self, i + 1, used | masks[i]);
            chosen.pop_back();
            for (std::size_t e : s) --degree[e];
        }
    };
    if (m > 0) dfs(dfs, 0, 0);
    if (!options.canonical) return out;
    std::set<TripleSystem> classes;
    for (const TripleSystem& t : out) classes.insert(canonical_form(t));
    return {classes.begin(), classes.end()};
}

SystemEvaluation evaluate_system(const DiscriminantalArrangement& b, const SimplicityOracle& oracle,
                                 const TripleSystem& t) {
    if (b.k() != 2 || t.n != b.n())
        throw PreconditionError("requires_k2", "evaluate_system needs B(n,2,A) with matching n");
    validate(t);
    SystemEvaluation ev;
    ev.flat = closure(b, t.triples);
    ev.rank = ev.flat.rank;
    ev.multiplicity = ev.flat.multiplicity();
    ev.simple = oracle.is_simple(ev.flat);
    std::vector<std::size_t> idx;
    for (const Subset& s : t.triples) idx.push_back(b.index_of(s));
    std::sort(idx.begin(), idx.end());
    ev.non_very_generic = t.triples.size() > ev.rank && ev.simple && ev.flat.indices == idx;
    return ev;
}

SystemEvaluation evaluate_system(const Arrangement& a, const TripleSystem& t) {
    const auto b = build_discriminantal(a);
    return evaluate_system(b, SimplicityOracle(b), t);
}

OrchardResult orchard_max(const Arrangement& a, std::uint64_t seed, std::size_t witness_limit) {
    if (a.dimension() != 2) throw PreconditionError("requires_k2", "the orchard search works on line arrangements");
    const std::size_t n = a.size();
    if (n > kMaxN) throw PreconditionError("n_too_large", "orchard search is limited to n <= 9");
    OrchardResult res;
    if (n < 4) return res;
    const auto b = build_discriminantal(a);
    const SimplicityOracle oracle(b);
    const std::size_t max_rank = n - 3;
    std::vector<std::uint64_t> masks;
    for (const auto& h : b.hyperplanes()) masks.push_back(pair_mask(h.subset));

    // Closed simple systems of size m with rank <= n-3 whose least triple is `first`.
    auto search = [&](std::size_t m, std::size_t first) {
        std::vector<std::vector<std::size_t>> found;
        std::vector<std::size_t> chosen;
        auto dfs = [&](auto&& self, const Subspace& span, std::uint64_t used) -> void {
            const std::size_t last = chosen.back();
            if (chosen.size() == m) {
                for (std::size_t g = last + 1; g < b.size(); ++g)
                    if (span.contains(b[g].alpha)) return;  // closure would add D_g
                found.push_back(chosen);
                return;
            }
            for (std::size_t h = last + 1; h + (m - chosen.size()) <= b.size(); ++h) {
                if (used & masks[h]) continue;
                Subspace next = span;
                next.insert(b[h].alpha);
                if (next.dimension() > max_rank) continue;
                // A skipped hyperplane inside the span can never join T later.
                bool skipped = false;
                std::size_t c = 0;
                for (std::size_t g = 0; g < h && !skipped; ++g) {
                    if (c < chosen.size() && chosen[c] == g) {
                        ++c;
                        continue;
                    }
                    skipped = next.contains(b[g].alpha);
                }
                if (skipped) continue;
                Flat probe;
                probe.subspace = next;
                if (!oracle.is_simple(probe)) continue;
                chosen.push_back(h);
                self(self, next, used | masks[h]);
                chosen.pop_back();
            }
        };
        Subspace start(n);
        start.insert(b[first].alpha);
        for (std::size_t g = 0; g < first; ++g)
            if (start.contains(b[g].alpha)) return found;
        Flat probe;
        probe.subspace = start;
        if (!oracle.is_simple(probe)) return found;
        chosen.push_back(first);
        dfs(dfs, start, masks[first]);
        return found;
    };

    for (std::size_t m = n * (n - 1) / 6; m >= 1; --m) {
        auto parts = parallel_map<std::vector<std::vector<std::size_t>>>(
            b.size(), [&](std::size_t first) { return search(m, first); });
        std::vector<std::vector<std::size_t>> systems;
        for (auto& p : parts)
            for (auto& s : p) systems.push_back(std::move(s));
        res.levels.push_back({m, systems.size()});
        if (systems.empty()) continue;

        res.m_max = m;
        res.witness_count = systems.size();
        if (witness_limit > 0 && systems.size() > witness_limit) systems.resize(witness_limit);
        res.witnesses = parallel_map<OrchardWitness>(systems.size(), [&](std::size_t i) {
            OrchardWitness w;
            w.system.n = n;
            for (std::size_t h : systems[i]) w.system.triples.push_back(b[h].subset);
            w.flat = closure(b, systems[i]);
            w.realized = realize_translate(a, b, w.flat, seed);
            w.stats = incidence_stats(homogenize(w.realized));
            if (w.stats.count(3) != m || w.stats.max_multiplicity() > 3)
                throw std::logic_error("orchard witness translate does not realize its triple system");
            return w;
        });
        res.rank = res.witnesses.front().flat.rank;
        return res;
    }
    return res;
}

}  // namespace discrim

#include "support.hpp"

#include "discrim/completion.hpp"

#include <doctest.h>

#include <functional>

#include <set>

using namespace discrim;
using testing::pappus_p;
using testing::pappus_pc;
using testing::sigma1;
using testing::sigma2;
using testing::sigma3;

namespace {

std::string code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const PreconditionError& e) {
        return e.code();
    }
    return "";
}

// Point sets of >= 3 double points on a common non-input line, by pairwise joins.
std::set<std::set<IndexPair>> brute_collinearities(const std::vector<ProjectiveFlat>& lines) {
    std::vector<IndexPair> pairs;
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j) pairs.emplace_back(i, j);
    std::set<std::set<IndexPair>> out;
    for (std::size_t x = 0; x < pairs.size(); ++x) {
        for (std::size_t y = x + 1; y < pairs.size(); ++y) {
            const Vector axis = join(double_point(lines, pairs[x]), double_point(lines, pairs[y]));
            if (std::find(lines.begin(), lines.end(), axis) != lines.end()) continue;
            std::set<IndexPair> on;
            for (const IndexPair& p : pairs)
                if (incident(axis, double_point(lines, p))) on.insert(p);
            if (on.size() >= 3) out.insert(on);
        }
    }
    return out;
}

std::set<std::string> brute_strong(const std::vector<ProjectiveFlat>& lines) {
    const auto cs = brute_collinearities(lines);
    std::set<std::string> out;
    for (const Involution& s : all_involutions(lines.size())) {
        if (s.is_identity()) continue;
        bool ok = true;
        for (const auto& c : cs) {
            std::set<IndexPair> img;
            for (const IndexPair& p : c) img.insert(s(p));
            ok = ok && img == c;
        }
        if (ok) out.insert(s.to_string());
    }
    return out;
}

std::set<std::string> names(const std::vector<Involution>& v) {
    std::set<std::string> out;
    for (const auto& s : v) out.insert(s.to_string());
    return out;
}

}  // namespace

TEST_CASE("involution parsing") {
    const Involution s = Involution::parse("(1 6)(2 5)(3 4)", 6);
    CHECK(s.to_string() == "(1 6)(2 5)(3 4)");
    CHECK(s(0) == 5);
    CHECK(s(IndexPair{0, 1}) == IndexPair{4, 5});
    CHECK(s(Subset{0, 1, 2}) == Subset{3, 4, 5});
    CHECK(Involution::parse("(3 4) (6 1)(5 2)", 6) == s);
    CHECK(Involution::parse("", 6).is_identity());
    CHECK(code_of([] { Involution::parse("()", 6); }) == "bad_sigma");
    CHECK(code_of([] { Involution::parse("(1 2)(2 3)", 6); }) == "bad_sigma");
    CHECK(code_of([] { Involution::parse("(1 7)", 6); }) == "bad_sigma");
    CHECK(code_of([] { Involution::parse("(1 1)", 6); }) == "bad_sigma");
    CHECK(code_of([] { Involution::parse("(1 2 3)", 6); }) == "bad_sigma");
    CHECK(code_of([] { Involution::parse("1 2", 6); }) == "bad_sigma");
}

TEST_CASE("there are 76 involution products in S6") {
    const auto all = all_involutions(6);
    CHECK(all.size() == 76);
    std::set<std::string> distinct;
    for (const auto& s : all) {
        distinct.insert(s.to_string());
        for (std::size_t i = 0; i < 6; ++i) CHECK(s(s(i)) == i);
    }
    CHECK(distinct.size() == 76);
    CHECK(all_involutions(4).size() == 10);
}

TEST_CASE("strong involutions agree with the geometric oracle") {
    const auto p = strong_involutions(pappus_p());
    CHECK(names(p) == brute_strong(pappus_p()));
    CHECK(names(p) == std::set<std::string>{sigma1().to_string(), sigma2().to_string(), sigma3().to_string()});
    const auto pc = strong_involutions(pappus_pc());
    CHECK(names(pc) == brute_strong(pappus_pc()));
    CHECK(names(pc) == std::set<std::string>{sigma3().to_string()});

    std::set<std::set<IndexPair>> found;
    for (const auto& c : collinearity_conditions(pappus_pc())) found.insert({c.points.begin(), c.points.end()});
    CHECK(found == brute_collinearities(pappus_pc()));
}

TEST_CASE("strong involutions need a collinearity") {
    const Arrangement a = testing::load("example31.json");
    CHECK(collinearity_conditions(homogenize(a)).empty());
    CHECK(code_of([&] { strong_involutions(homogenize(a)); }) == "no_collinearities");
    CHECK(code_of([&] { sigma_completion(homogenize(a), sigma1()); }) == "no_collinearities");
}

TEST_CASE("sigma completions of P") {
    for (const Involution* s : {&sigma1(), &sigma2(), &sigma3()}) {
        const CompletionResult c = sigma_completion(pappus_p(), *s);
        REQUIRE(c.lines.size() == 6);
        CHECK(c.orbit_map.size() == 15);
        CHECK(c.axes.size() == 3);
        std::map<std::size_t, std::size_t> load;
        for (const auto& [p, line] : c.orbit_map) {
            CHECK(incident(c.lines[line], double_point(pappus_p(), p)));
            CHECK(c.orbit_map.at((*s)(p)) == line);
            ++load[line];
            if ((*s)(p) == p)
                CHECK(std::find(c.axes.begin(), c.axes.end(), line) != c.axes.end());
        }
        for (std::size_t l = 0; l < 6; ++l) {
            const bool axis = std::find(c.axes.begin(), c.axes.end(), l) != c.axes.end();
            CHECK(load[l] == (axis ? 3u : 2u));
        }
        CHECK_FALSE(concurrent(c.lines));
        CHECK(sigma_completion(pappus_p(), *s) == c);
    }
}

TEST_CASE("sigma3 completion of Pc is central") {
    const CompletionResult c = sigma_completion(pappus_pc(), sigma3());
    CHECK(concurrent(c.lines));
    CHECK(code_of([] { sigma_completion(pappus_pc(), sigma1()); }) == "not_strong");
    CHECK(code_of([] { sigma_completion(pappus_pc(), sigma2()); }) == "not_strong");
}

TEST_CASE("collinearity flats") {
    const Collinearity c{{0, 0, 1}, {{0, 1}, {2, 3}, {4, 5}}};
    CHECK(collinearity_flat(c) == std::vector<Subset>{{0, 1, 2, 3}, {0, 1, 4, 5}, {2, 3, 4, 5}});
    CHECK(code_of([] { collinearity_flat(Collinearity{{0, 0, 1}, {{0, 1}, {2, 3}}}); }) == "bad_collinearity");
    CHECK(code_of([] { collinearity_flat(Collinearity{{0, 0, 1}, {{0, 1}, {1, 3}, {4, 5}}}); }) == "bad_collinearity");

    const auto lines = pappus_p();
    const auto b3 = trace_discriminantal(lines);
    const auto tps = triple_point_flats(b3);
    std::set<std::vector<Subset>> families;
    for (const Flat& f : tps) {
        CHECK(f.rank == 2);
        CHECK(f.multiplicity() == 3);
        families.insert(index_family(b3, f));
    }
    for (const auto& col : collinearity_conditions(lines)) {
        const auto fam = collinearity_flat(col);
        CHECK(families.contains(fam));
        // equivariance under every strong involution
        for (const Involution& s : strong_involutions(lines)) {
            Collinearity moved{col.axis, {}};
            for (const IndexPair& p : col.points) moved.points.push_back(s(p));
            std::sort(moved.points.begin(), moved.points.end());
            std::vector<Subset> image;
            for (const Subset& k : fam) image.push_back(s(k));
            std::sort(image.begin(), image.end());
            CHECK(collinearity_flat(moved) == image);
        }
    }
}

TEST_CASE("independence and pure dependence of triple points") {
    const auto b3 = trace_discriminantal(pappus_p());
    const auto tps = triple_point_flats(b3);
    REQUIRE(tps.size() >= 3);
    for (const Flat& f : tps) CHECK_FALSE(independent(f, f));
    for (std::size_t i = 0; i < tps.size(); ++i)
        for (std::size_t j = 0; j < tps.size(); ++j) {
            std::vector<std::size_t> common;
            std::set_intersection(tps[i].indices.begin(), tps[i].indices.end(), tps[j].indices.begin(),
                                  tps[j].indices.end(), std::back_inserter(common));
            CHECK(independent(tps[i], tps[j]) == common.empty());
        }
    CHECK(max_independent(tps) == 3);
    for (const Flat& p : purely_dependent_flats(tps)) {
        bool witnessed = false;
        for_each_k_subset(tps.size(), 3, [&](const Subset& t) {
            const Flat &a = tps[t[0]], &b = tps[t[1]], &c = tps[t[2]];
            witnessed = independent(a, b) && independent(a, c) && independent(b, c) && purely_dependent(p, a, b, c);
            return !witnessed;
        });
        CHECK(witnessed);
    }
}

TEST_CASE("Pappus generator and tuners") {
    const PappusFamily p = concurrency_tune(default_pappus_family(), 5);
    CHECK(p.params[5] == Scalar(5));
    CHECK(axes_concurrent(p));
    CHECK_FALSE(fourth_collinearity(p));
    CHECK(concurrency_tune(p, 5) == p);
    CHECK(concurrency_tune(p, 0) == p);

    const PappusFamily pc = fourth_collinearity_tune(default_pappus_c_family(), 5, 1);
    CHECK(axes_concurrent(pc));
    CHECK(fourth_collinearity(pc));
    // hand oracle: concurrency iff (u_i, v_i) collinear; fourth iff u1 + u3 = 2 u2
    const auto& q = pc.params;
    CHECK(((q[1] - q[0]) * (q[5] - q[3]) - (q[2] - q[0]) * (q[4] - q[3])).is_zero());
    CHECK(q[0] + q[2] == q[1] * 2);

    const Arrangement a = pappus_generator(p);
    CHECK(a.dimension() == 3);
    CHECK(a.size() == 6);
    CHECK(a[0].label == "l1");
    CHECK(planar_lines(a) == pappus_p());

    const PappusFamily par = concurrency_tune(parallel_pappus_family(), 5);
    CHECK(axes_concurrent(par));
    const auto ax = pappus_raw_axes(par);
    const Vector meet = cross(ax[0], ax[1]);
    CHECK_FALSE(is_zero(meet));
    CHECK(meet[2].is_zero());  // concurrent at infinity
    CHECK(strong_involutions(planar_lines(pappus_generator(par))).size() == 3);

    PappusFamily bad = default_pappus_family();
    bad.params[1] = bad.params[0];
    CHECK(code_of([&] { pappus_generator(bad); }) == "degenerate_parameters");
    PappusFamily flat = default_pappus_family();
    flat.params = {1, 1, 4, 2, 3, 7};
    CHECK(code_of([&] { concurrency_tune(flat, 5); }) == "no_rational_solution");
    PappusFamily irr = default_pappus_family();
    irr.params[0] = Scalar::parse("sqrt(2)");
    CHECK(code_of([&] { concurrency_tune(irr, 5); }) == "irrational_family");
}

TEST_CASE("union certificates") {
    const auto cp = union_certify(pappus_p(), sigma_completion(pappus_p(), sigma1()));
    CHECK(cp.stats.lines == 12);
    CHECK(cp.stats.count(3) == 19);
    CHECK(cp.stats.count(2) == 9);
    CHECK(cp.max_triple);
    CHECK_FALSE(cp.min_ordinary);
    CHECK_FALSE(cp.completion_central);

    const auto cc = union_certify(pappus_pc(), sigma_completion(pappus_pc(), sigma3()));
    CHECK(cc.stats.t == std::map<std::size_t, std::size_t>{{2, 6}, {3, 15}, {6, 1}});
    CHECK(cc.min_ordinary);
    CHECK_FALSE(cc.max_triple);
    CHECK(cc.completion_central);
    CHECK(cc.purely_dependent_fixed);
}

TEST_CASE("conjecture report statuses") {
    for (const Involution* s : {&sigma1(), &sigma2(), &sigma3()}) {
        const ConjectureReport r = conjecture_report(pappus_p(), *s);
        CHECK(r.strong);
        CHECK(r.hypothesis_holds);
        CHECK(r.clause1.status == "agree");
        CHECK(r.clause2.status == "agree");
        CHECK(r.clause1.lhs == false);
        CHECK(r.clause2.lhs == true);
    }
    const ConjectureReport c = conjecture_report(pappus_pc(), sigma3());
    CHECK(c.clause1.status == "agree");
    CHECK(c.clause1.lhs == true);
    CHECK(c.clause2.status == "agree");
    CHECK(c.clause2.lhs == false);

    const ConjectureReport ns = conjecture_report(pappus_pc(), sigma1());
    CHECK_FALSE(ns.strong);
    CHECK(ns.clause1.status == "inapplicable");
    CHECK(ns.completion_error.has_value());
}

#include "discrim/cli.hpp"

#include "discrim/io.hpp"
#include "discrim/orchard.hpp"
#include "discrim/render.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <map>

namespace discrim {

namespace {

struct Options {
    std::string input;
    std::string out;
    std::string completion;
    std::string sigma;
    std::string chart;
    std::string svg;
    std::string make;
    std::string family = "default";
    std::uint64_t seed = kDefaultSeed;
    std::size_t max_rank = 0;
    std::size_t witness_limit = 0;
    bool max_n_check = false;
};

std::vector<ProjectiveFlat> lines_of(const Arrangement& a) { return planar_lines(a); }

json flat_json(const DiscriminantalArrangement& b, const Flat& f) {
    return {{"family", family_json(b, f)}, {"rank", f.rank}, {"multiplicity", f.multiplicity()}};
}

json collinearity_json(const Collinearity& c) {
    json pts = json::array();
    for (auto [i, j] : c.points) pts.push_back({i + 1, j + 1});
    return {{"axis", to_json(c.axis)}, {"points", pts}};
}

json certificate_json(const UnionCertificate& c) {
    return {{"census", to_json(c.stats)},
            {"max_triple", c.max_triple},
            {"min_ordinary", c.min_ordinary},
            {"completion_central", c.completion_central},
            {"purely_dependent_fixed", c.purely_dependent_fixed}};
}

json optional_bool(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

json clause_json(const ClauseReport& c) {
    return {{"status", c.status}, {"lhs", optional_bool(c.lhs)}, {"rhs", optional_bool(c.rhs)}, {"note", c.note}};
}

CompletionResult completion_for(const Options& o, const std::vector<ProjectiveFlat>& lines) {
    if (!o.completion.empty()) return parse_completion(read_file(o.completion), lines.size());
    if (o.sigma.empty()) throw PreconditionError("missing_sigma", "give --sigma or --completion");
    return sigma_completion(lines, Involution::parse(o.sigma, lines.size()));
}

json cmd_check_generic(const Options& o) {
    const Arrangement a = load_arrangement(o.input);
    require_generic(a);
    return {{"input_sha256", canonical_hash(a)}, {"n", a.size()}, {"k", a.dimension()}, {"generic", true}};
}

json cmd_build(const Options& o) {
    const Arrangement a = load_arrangement(o.input);
    const auto b = build_discriminantal(a);
    json hs = json::array();
    for (const auto& h : b.hyperplanes()) hs.push_back({{"L", one_based(h.subset)}, {"alpha", to_json(h.alpha)}});
    return {{"input_sha256", canonical_hash(a)}, {"n", b.n()}, {"k", b.k()}, {"hyperplanes", hs}, {"rank", b.rank()}};
}

json cmd_lattice(const Options& o) {
    const Arrangement a = load_arrangement(o.input);
    const auto b = build_discriminantal(a);
    const std::size_t r = o.max_rank ? o.max_rank : b.n() - b.k();
    const Lattice lat = flats_up_to_rank(b, r);
    std::optional<SimplicityOracle> oracle;
    if (b.k() == 2) oracle.emplace(b);
    json ranks = json::array();
    for (std::size_t q = 1; q <= r; ++q) {
        json flats = json::array();
        std::map<std::size_t, std::size_t> census;
        for (const Flat& f : lat.by_rank[q]) {
            json fj = flat_json(b, f);
            ++census[f.multiplicity()];
            if (oracle) {
                const bool simple = oracle->is_simple(f);
                fj["simple"] = simple;
                fj["non_very_generic"] = simple && f.multiplicity() > f.rank;
            }
            flats.push_back(std::move(fj));
        }
        json cj = json::object();
        for (auto [m, c] : census) cj[std::to_string(m)] = c;
        ranks.push_back({{"rank", q}, {"count", lat.by_rank[q].size()}, {"census", cj}, {"flats", flats}});
    }
    return {{"input_sha256", canonical_hash(a)}, {"n", b.n()}, {"k", b.k()}, {"ranks", ranks}};
}

json cmd_very_generic(const Options& o) {
    const Arrangement a = load_arrangement(o.input);
    const auto b = build_discriminantal(a);
    const std::size_t r = o.max_rank ? o.max_rank : b.n() - b.k();
    const VeryGenericReport rep = very_generic_report(b, r);
    json ws = json::array();
    for (const Flat& f : rep.witnesses) ws.push_back(flat_json(b, f));
    return {{"input_sha256", canonical_hash(a)}, {"max_rank", r}, {"very_generic", rep.very_generic}, {"witnesses", ws}};
}

json cmd_qsets(const Options& o) {
    const Arrangement a = load_arrangement(o.input);
    const auto b = build_discriminantal(a);
    json flats = json::array();
    for (const auto& q : quadrilateral_translates(a, o.seed)) {
        flats.push_back({{"family", family_json(b, q.flat)},
                         {"translate", to_json(q.translate)},
                         {"census", to_json(incidence_stats(homogenize(q.translate)))}});
    }
    return {{"input_sha256", canonical_hash(a)}, {"seed", o.seed}, {"count", flats.size()}, {"flats", flats}};
}

json cmd_orchard(const Options& o) {
    const Arrangement a = load_arrangement(o.input);
    if (o.max_n_check && a.size() > 9) throw PreconditionError("n_too_large", "orchard search is limited to n <= 9");
    const OrchardResult res = orchard_max(a, o.seed, o.witness_limit);
    json ws = json::array();
    for (const OrchardWitness& w : res.witnesses) {
        json triples = json::array();
        for (const Subset& t : w.system.triples) triples.push_back(one_based(t));
        ws.push_back({{"triples", triples},
                      {"rank", w.flat.rank},
                      {"translate", to_json(w.realized)},
                      {"census", to_json(w.stats)}});
    }
    json report = {{"input_sha256", canonical_hash(a)}, {"seed", o.seed},         {"m_max", res.m_max},
                   {"rank", res.rank},                  {"witness_count", res.witness_count}, {"witnesses", ws}};
    if (o.max_n_check) {
        json levels = json::array();
        for (const auto& l : res.levels) levels.push_back({{"m", l.m}, {"closed_simple_systems", l.found}});
        report["levels"] = levels;
    }
    return report;
}

json cmd_pappus(const Options& o) {
    PappusFamily f;
    if (o.family == "default") f = o.make == "pc" ? default_pappus_c_family() : default_pappus_family();
    else if (o.family == "parallel") f = parallel_pappus_family();
    else throw PreconditionError("bad_family", "--family is default or parallel");
    if (o.make == "p") f = concurrency_tune(f, 5);
    else if (o.make == "pc") f = fourth_collinearity_tune(f, 5, 1);
    else throw PreconditionError("bad_make", "--make is p or pc");

    const Arrangement a = pappus_generator(f);
    const auto lines = lines_of(a);
    const auto cs = collinearity_conditions(lines);
    json cj = json::array();
    for (const auto& c : cs) cj.push_back(collinearity_json(c));
    json strong = json::array();
    for (const auto& s : strong_involutions(lines)) strong.push_back(s.to_string());
    json params = json::array();
    for (const Scalar& s : f.params) params.push_back(to_json(s));

    json doc = to_json(a);
    doc["pappus"] = {{"frame", {{"a", to_json(f.frame_a)}, {"b", to_json(f.frame_b)}, {"center", to_json(f.center)}}},
                     {"params", params},
                     {"verification",
                      {{"collinearities", cj},
                       {"axes_concurrent", axes_concurrent(f)},
                       {"fourth_collinearity", fourth_collinearity(f)},
                       {"strong_involutions", strong}}}};
    return doc;
}

json cmd_sigma_complete(const Options& o) {
    const Arrangement a = load_arrangement(o.input);
    const auto lines = lines_of(a);
    json doc = to_json(sigma_completion(lines, Involution::parse(o.sigma, lines.size())));
    doc["input_sha256"] = canonical_hash(a);
    return doc;
}

json cmd_certify_union(const Options& o) {
    const Arrangement a = load_arrangement(o.input);
    const auto lines = lines_of(a);
    const CompletionResult comp = completion_for(o, lines);
    json doc = certificate_json(union_certify(lines, comp));
    doc["input_sha256"] = canonical_hash(a);
    doc["sigma"] = comp.sigma.to_string();
    return doc;
}

json cmd_conjecture(const Options& o) {
    const Arrangement a = load_arrangement(o.input);
    const auto lines = lines_of(a);
    const ConjectureReport r = conjecture_report(lines, Involution::parse(o.sigma, lines.size()));
    json doc = {{"input_sha256", canonical_hash(a)},
                {"sigma", o.sigma},
                {"n", r.n},
                {"strong", r.strong},
                {"independent_triple_points", r.independent_triple_points},
                {"independent_bound", r.independent_bound ? json(*r.independent_bound) : json(nullptr)},
                {"hypothesis_holds", r.hypothesis_holds},
                {"purely_dependent_fixed", r.purely_dependent_fixed},
                {"completion_error", r.completion_error ? json(*r.completion_error) : json(nullptr)},
                {"chart", r.chart ? json(*r.chart) : json(nullptr)},
                {"completion_flat", {{"rank", r.completion_flat_rank}, {"multiplicity", r.completion_flat_multiplicity}}},
                {"clause1", clause_json(r.clause1)},
                {"clause2", clause_json(r.clause2)}};
    if (r.certificate) doc["certificate"] = certificate_json(*r.certificate);
    return doc;
}

json cmd_stats(const Options& o) {
    const Arrangement a = load_arrangement(o.input);
    auto lines = lines_of(a);
    if (!o.completion.empty() || !o.sigma.empty()) {
        const CompletionResult comp = completion_for(o, lines);
        lines.insert(lines.end(), comp.lines.begin(), comp.lines.end());
    }
    return {{"input_sha256", canonical_hash(a)}, {"census", to_json(incidence_stats(lines))}};
}

std::string cmd_render(const Options& o) {
    const Arrangement a = load_arrangement(o.input);
    auto lines = lines_of(a);
    std::vector<std::string> labels;
    for (const auto& h : a.hyperplanes()) labels.push_back(h.label);
    if (!o.completion.empty() || !o.sigma.empty()) {
        const CompletionResult comp = completion_for(o, lines);
        for (std::size_t i = 0; i < comp.lines.size(); ++i) {
            lines.push_back(comp.lines[i]);
            labels.push_back("c" + std::to_string(i + 1));
        }
    }
    std::optional<ProjectiveFlat> chart;
    if (!o.chart.empty() && o.chart != "none") {
        auto it = std::find(labels.begin(), labels.end(), o.chart);
        if (it == labels.end()) throw PreconditionError("bad_chart", "no line labelled " + o.chart);
        chart = lines[static_cast<std::size_t>(it - labels.begin())];
    }
    return render_svg(lines, labels, chart);
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot write " + path);
    f << text;
}

void diagnose(std::ostream& err, json d) { err << d.dump() << "\n"; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Discriminantal arrangements, quadrilateral sets and Pappus completions"};
    app.require_subcommand(1);
    app.add_option("--seed", o.seed, "seed for translate sampling");
    app.add_option("--out", o.out, "write the report here instead of standard output");

    std::map<std::string, std::function<json()>> verbs;
    auto verb = [&](const std::string& name, const std::string& help, std::function<json()> fn, bool input = true) {
        CLI::App* sub = app.add_subcommand(name, help);
        if (input) sub->add_option("--input,-i", o.input, "arrangement JSON")->required();
        sub->add_option("--out", o.out, "write the report here instead of standard output");
        sub->add_option("--seed", o.seed, "seed for translate sampling");
        verbs[name] = std::move(fn);
        return sub;
    };
    verb("check-generic", "verify general position", [&] { return cmd_check_generic(o); });
    verb("build", "list the hyperplanes of B(n,k,A)", [&] { return cmd_build(o); });
    verb("lattice", "flats of B(n,k,A) by rank", [&] { return cmd_lattice(o); })
        ->add_option("--max-rank", o.max_rank, "highest rank to compute (default n-k)");
    verb("very-generic", "search for simple non very generic flats", [&] { return cmd_very_generic(o); })
        ->add_option("--max-rank", o.max_rank, "highest rank to search (default n-k)");
    verb("qsets", "quadrilateral-set flats with realized translates", [&] { return cmd_qsets(o); });
    auto* orchard = verb("orchard", "maximal simple triple systems", [&] { return cmd_orchard(o); });
    orchard->add_flag("--max-n-check", o.max_n_check, "enforce n <= 9 and report every level searched");
    orchard->add_option("--witness-limit", o.witness_limit, "keep at most this many witnesses (0 = all)");
    auto* pappus = verb("pappus", "build a tuned Pappus trace", [&] { return cmd_pappus(o); }, false);
    pappus->add_option("--make", o.make, "p or pc")->required();
    pappus->add_option("--family", o.family, "default or parallel");
    verb("sigma-complete", "sigma-completion of a trace", [&] { return cmd_sigma_complete(o); })
        ->add_option("--sigma", o.sigma, "involution, e.g. \"(1 6)(2 5)(3 4)\"")
        ->required();
    auto* certify = verb("certify-union", "census and verdicts of the 12-line union", [&] { return cmd_certify_union(o); });
    certify->add_option("--sigma", o.sigma, "involution");
    certify->add_option("--completion", o.completion, "completion JSON");
    verb("conjecture", "evaluate both clauses on one instance", [&] { return cmd_conjecture(o); })
        ->add_option("--sigma", o.sigma, "involution")
        ->required();
    auto* stats = verb("stats", "incidence census", [&] { return cmd_stats(o); });
    stats->add_option("--sigma", o.sigma, "also include this sigma-completion");
    stats->add_option("--completion", o.completion, "also include these completion lines");
    auto* render = app.add_subcommand("render", "draw an affine chart as SVG");
    render->add_option("--input,-i", o.input, "arrangement JSON")->required();
    render->add_option("--svg", o.svg, "output SVG path");
    render->add_option("--out", o.out, "output SVG path when --svg is absent");
    render->add_option("--chart", o.chart, "label of the line sent to infinity");
    render->add_option("--sigma", o.sigma, "also draw this sigma-completion");
    render->add_option("--completion", o.completion, "also draw these completion lines");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        diagnose(err, {{"error", "usage"}, {"message", e.what()}});
        return 2;
    }

    try {
        const std::string name = app.get_subcommands().front()->get_name();
        if (name == "render") {
            const std::string svg = cmd_render(o);
            emit(svg, o.svg.empty() ? o.out : o.svg, out);
            return 0;
        }
        emit(verbs.at(name)().dump(2) + "\n", o.out, out);
        return 0;
    } catch (const PreconditionError& e) {
        diagnose(err, {{"error", e.code()}, {"message", e.what()}, {"indices", one_based(e.indices())}});
        return 2;
    } catch (const InputError& e) {
        diagnose(err, {{"error", "parse_error"}, {"message", e.what()}, {"line", e.line()}, {"column", e.column()}});
        return 2;
    } catch (const std::exception& e) {
        diagnose(err, {{"error", "internal"}, {"message", e.what()}});
        return 1;
    }
}

}  // namespace discrim

#include <plabel/choosability.hpp>
#include <plabel/constructive.hpp>
#include <plabel/errors.hpp>
#include <plabel/generators.hpp>
#include <plabel/graph_io.hpp>
#include <plabel/harness.hpp>
#include <plabel/incidence.hpp>
#include <plabel/serialization.hpp>
#include <plabel/solver.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace plabel;

namespace {

enum Exit { ok = 0, property_failure = 1, usage = 2, violation = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string & path)
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw UsageError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string & path, const std::string & text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (! out)
        throw UsageError("cannot write '" + path + "'");
    out << text;
}

struct Options {
    int p = -1;
    int k = -1;
    std::string graph_file;
    std::string format = "edge-list";
    std::string lists_file;
    std::uint64_t seed = 1;
    std::uint64_t budget = 0;
    int universe = -1;
    std::string out;
    std::string dot;
    std::string report = "csv";
    bool timing = false;

    // construct
    std::string family;
    int n = -1;

    // choosability
    std::string order = "lex";
    bool exhaustive = false;
    bool no_automorphisms = false;
    std::uint64_t shard_index = 0;
    std::uint64_t shard_count = 1;

    // suites
    int p_min = 1;
    int p_max = 3;
    int size_min = 2;
    int size_max = 8;
    int trials = 1000;
    std::string policy = "random-k";
    int slack = -1;
    unsigned workers = 0;
    std::string conjecture = "general";
    bool lp1 = false;
};

Graph load_graph(const Options & o)
{
    if (o.graph_file.empty())
        throw UsageError("--graph is required");
    return parse_graph(read_file(o.graph_file), parse_graph_format(o.format));
}

int require_p(const Options & o)
{
    if (o.p < 0)
        throw UsageError("--p is required");
    return o.p;
}

std::string dump(const Json & j) { return j.dump(2) + "\n"; }

Json audit_json(const Audit & a)
{
    Json reductions = Json::array();
    for (const auto & r : a.reductions)
        reductions.push_back(Json{{"step", r.step}, {"element", r.element.key()}, {"size", r.size}, {"bound", r.bound}});
    return Json{{"steps", a.steps}, {"reductions", std::move(reductions)}, {"interchanges", a.interchanges},
            {"stuck_shapes", a.stuck_shapes}, {"invalid_swaps", a.invalid_swaps},
            {"local_resolves", a.local_resolves}, {"full_resolves", a.full_resolves},
            {"center_attempts", a.center_attempts}, {"fallbacks", a.fallbacks()}};
}

void maybe_dot(const Options & o, const Graph & g, const TotalLabelling & c)
{
    if (! o.dot.empty())
        write_output(o.dot, to_dot(g, c));
}

int cmd_solve(const Options & o)
{
    const Graph g = load_graph(o);
    const int p = require_p(o);
    if (o.k >= 0) {
        auto res = solve_span(g, p, o.k);
        if (! res.labelled()) {
            write_output(o.out, dump(Json{{"kind", "infeasible"}, {"graph", graph_to_json(g)}, {"p", p}, {"k", o.k},
                                        {"nodes", res.stats.nodes}}));
            return property_failure;
        }
        maybe_dot(o, g, *res.labelling);
        write_output(o.out, dump(labelling_certificate(g, p, *res.labelling)));
        return ok;
    }
    const auto opt = min_span(g, p);
    Json cert = labelling_certificate(g, p, opt.labelling);
    cert["claimed_lambda"] = opt.lambda;
    cert["chi"] = opt.chi();
    cert["nodes"] = opt.nodes;
    maybe_dot(o, g, opt.labelling);
    write_output(o.out, dump(cert));
    return ok;
}

ListAssignment load_lists(const Options & o, int & p)
{
    if (o.lists_file.empty())
        throw UsageError("--lists is required");
    const Json j = parse_json(read_file(o.lists_file));
    if (p < 0) {
        if (! j.contains("p"))
            throw UsageError("--p is required when the lists file has no \"p\"");
        p = j.at("p").get<int>();
    }
    return lists_from_json(j);
}

int cmd_list_solve(const Options & o)
{
    const Graph g = load_graph(o);
    int p = o.p;
    const auto lists = load_lists(o, p);
    if (! lists.covers_exactly(g))
        throw UsageError("lists must cover exactly the elements of the graph");
    auto res = solve_list(g, p, lists);
    if (! res.labelled()) {
        Json j{{"kind", "infeasible"}, {"graph", graph_to_json(g)}, {"p", p}, {"nodes", res.stats.nodes}};
        j["lists"] = lists_to_json(p, lists).at("lists");
        write_output(o.out, dump(j));
        return property_failure;
    }
    maybe_dot(o, g, *res.labelling);
    write_output(o.out, dump(labelling_certificate(g, p, *res.labelling, &lists)));
    return ok;
}

int cmd_choosability(const Options & o)
{
    const Graph g = load_graph(o);
    const int p = require_p(o);
    if (o.k < 1)
        throw UsageError("--k must be at least 1");
    const int universe = o.universe >= 0 ? o.universe : default_universe(o.k);
    Certificate cert;
    if (o.exhaustive) {
        cert = certify_choosable(g, p, o.k, universe);
    } else {
        WitnessSearch search;
        search.k = o.k;
        search.universe = universe;
        if (o.budget > 0)
            search.budget = o.budget;
        search.order = o.order == "random" ? SearchOrder::random : SearchOrder::lexicographic;
        search.seed = o.seed;
        search.use_automorphisms = ! o.no_automorphisms;
        search.shard_index = o.shard_index;
        search.shard_count = o.shard_count;
        cert = find_bad_assignment(g, p, search);
    }
    write_output(o.out, dump(certificate_to_json(cert)));
    return ok;
}

int cmd_construct(const Options & o)
{
    const int p = o.p;
    if (o.family == "star-span") {
        if (o.n < 1)
            throw UsageError("--n is required for star-span");
        const int pp = require_p(o);
        const Graph g = make_star(o.n);
        const auto c = label_star_span(o.n, pp);
        maybe_dot(o, g, c);
        write_output(o.out, dump(labelling_certificate(g, pp, c)));
        return is_valid(g, pp, c, true) ? ok : property_failure;
    }
    const Family family = parse_family(o.family);
    const Graph g = load_graph(o);
    int pp = p;
    ListAssignment lists;
    if (o.lists_file.empty()) {
        if (o.k < 1)
            throw UsageError("construct needs --lists or --k (full lists {0..k-1})");
        lists = ListAssignment::full(g, 0, o.k - 1);
        if (pp < 0)
            throw UsageError("--p is required");
    } else {
        lists = load_lists(o, pp);
    }
    const auto built = run_labeller(family, g, pp, lists);
    const bool valid = is_valid(g, pp, built.labelling, true) && respects_lists(built.labelling, lists);
    Json j{{"labelling", labelling_certificate(g, pp, built.labelling, &lists)}, {"audit", audit_json(built.audit)},
            {"valid", valid}};
    maybe_dot(o, g, built.labelling);
    write_output(o.out, dump(j));
    return valid ? ok : property_failure;
}

int cmd_incidence(const Options & o)
{
    const Graph g = load_graph(o);
    const auto im = incidence_graph(g);
    if (o.p < 0) {
        write_output(o.out, emit_graph(im.derived, parse_graph_format(o.format)));
        return ok;
    }
    const auto direct = min_span(g, o.p);
    const auto lp1 = lp1_min_span(im.derived, o.p);
    const auto back = transport_from_incidence(im, lp1.labelling);
    const bool agree = direct.lambda == lp1.lambda && is_valid(g, o.p, back, true);
    Json j{{"graph", graph_to_json(g)}, {"incidence", graph_to_json(im.derived)}, {"p", o.p},
            {"lambda", direct.lambda}, {"lp1_lambda", lp1.lambda}, {"agree", agree}};
    write_output(o.out, dump(j));
    return agree ? ok : property_failure;
}

int emit_report(const Options & o, const Report & r)
{
    if (o.report == "json")
        write_output(o.out, dump(report_json(r, o.timing)));
    else if (o.report == "csv")
        write_output(o.out, report_csv(r, o.timing));
    else
        throw UsageError("--report must be csv or json");
    std::cerr << r.suite << ": " << r.rows.size() << " rows, " << r.failures << " failures, "
              << r.theorem_violations << " theorem violations, " << r.fallbacks << " fallbacks, "
              << r.full_resolves << " full re-solves\n";
    if (r.theorem_violations > 0)
        return violation;
    return r.passed() ? ok : property_failure;
}

ExperimentSpec experiment(const Options & o)
{
    ExperimentSpec spec;
    spec.family = parse_family(o.family.empty() ? "path" : o.family);
    spec.size_min = o.size_min;
    spec.size_max = o.size_max;
    spec.p_min = o.p >= 0 ? o.p : o.p_min;
    spec.p_max = o.p >= 0 ? o.p : o.p_max;
    spec.policy = parse_policy(o.policy);
    spec.trials = o.trials;
    spec.seed = o.seed;
    if (o.budget > 0)
        spec.budget = o.budget;
    spec.slack = o.slack;
    spec.workers = o.workers;
    spec.include_timing = o.timing;
    return spec;
}

int cmd_oracle(const Options & o)
{
    const int lo = o.p >= 0 ? o.p : o.p_min;
    const int hi = o.p >= 0 ? o.p : o.p_max;
    return emit_report(o, run_oracle_suite(lo, hi, o.size_min, o.size_max));
}

int cmd_props(const Options & o) { return emit_report(o, run_property_suite(experiment(o))); }

int cmd_hunt(const Options & o)
{
    return emit_report(o, hunt_counterexamples(parse_conjecture(o.conjecture), experiment(o)));
}

int cmd_recheck(const std::string & path)
{
    const Json j = parse_json(read_file(path));
    // construct output wraps its labelling
    const auto res = recheck_json(j.contains("labelling") && j.at("labelling").is_object() ? j.at("labelling") : j);
    std::cout << (res.ok ? "PASS " : "FAIL ") << res.detail << "\n";
    return res.ok ? ok : property_failure;
}

void common_graph(CLI::App * cmd, Options & o)
{
    cmd->add_option("--graph", o.graph_file, "graph file")->required();
    cmd->add_option("--format", o.format, "edge-list or graph6")->check(CLI::IsMember({"edge-list", "graph6"}));
}

void suite_options(CLI::App * cmd, Options & o)
{
    cmd->add_option("--p-min", o.p_min);
    cmd->add_option("--p-max", o.p_max);
    cmd->add_option("--size-min", o.size_min);
    cmd->add_option("--size-max", o.size_max);
    cmd->add_option("--report", o.report, "csv or json");
    cmd->add_flag("--timing", o.timing, "include wall-clock times in the report");
}

void experiment_options(CLI::App * cmd, Options & o)
{
    suite_options(cmd, o);
    cmd->add_option("--family", o.family, "path, tree, star, outerplanar or random");
    cmd->add_option("--trials", o.trials);
    cmd->add_option("--policy", o.policy, "full-range, random-k or adversarial");
    cmd->add_option("--slack", o.slack, "random-k draws from {0..k-1+slack}");
    cmd->add_option("--workers", o.workers, "0 = all cores");
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"(p,1)-total labelling toolkit"};
    app.require_subcommand(0, 1);
    Options o;
    std::string recheck_file;
    app.add_option("--recheck", recheck_file, "re-validate a certificate file");

    // shared options, accepted before or after the subcommand
    app.add_option("--p", o.p, "separation p");
    app.add_option("--k", o.k, "span bound or list size");
    app.add_option("--lists", o.lists_file, "list assignment JSON");
    app.add_option("--seed", o.seed);
    app.add_option("--budget", o.budget);
    app.add_option("--universe", o.universe, "colors are drawn from {0..U}");
    app.add_option("--out", o.out, "output file (default stdout)");
    app.add_option("--dot", o.dot, "write a DOT rendering of the labelling");
    app.fallthrough();

    auto * solve = app.add_subcommand("solve", "exact span (or feasibility at --k)");
    common_graph(solve, o);
    auto * list_solve = app.add_subcommand("list-solve", "exact list labelling");
    common_graph(list_solve, o);
    auto * choos = app.add_subcommand("choosability", "witness search or exhaustive certification");
    common_graph(choos, o);
    choos->add_option("--order", o.order, "lex or random")->check(CLI::IsMember({"lex", "random"}));
    choos->add_flag("--exhaustive", o.exhaustive, "enumerate every normalized assignment");
    choos->add_flag("--no-automorphisms", o.no_automorphisms);
    choos->add_option("--shard-index", o.shard_index);
    choos->add_option("--shard-count", o.shard_count);
    auto * construct = app.add_subcommand("construct", "constructive labeller");
    construct->add_option("--family", o.family, "path, tree, star, outerplanar or star-span")->required();
    construct->add_option("--graph", o.graph_file, "graph file");
    construct->add_option("--format", o.format)->check(CLI::IsMember({"edge-list", "graph6"}));
    construct->add_option("--n", o.n, "leaves for star-span");
    auto * incidence = app.add_subcommand("incidence", "incidence graph, or the bridge check with --p");
    common_graph(incidence, o);
    auto * oracle = app.add_subcommand("oracle", "closed-form tables for paths and stars");
    suite_options(oracle, o);
    auto * props = app.add_subcommand("props", "constructive labellers over random assignments");
    experiment_options(props, o);
    auto * hunt = app.add_subcommand("hunt", "counterexample search at the conjectured bound");
    experiment_options(hunt, o);
    hunt->add_option("--conjecture", o.conjecture, "general or outerplanar");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    } catch (const CLI::ParseError & e) {
        app.exit(e);
        return usage;
    }

    try {
        if (! recheck_file.empty())
            return cmd_recheck(recheck_file);
        if (*solve) return cmd_solve(o);
        if (*list_solve) return cmd_list_solve(o);
        if (*choos) return cmd_choosability(o);
        if (*construct) return cmd_construct(o);
        if (*incidence) return cmd_incidence(o);
        if (*oracle) return cmd_oracle(o);
        if (*props) return cmd_props(o);
        if (*hunt) return cmd_hunt(o);
        std::cerr << app.help();
        return usage;
    } catch (const TheoremViolation & e) {
        std::cerr << "theorem violation: " << e.what() << "\n";
        return violation;
    } catch (const ParseError & e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return usage;
    } catch (const UsageError & e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const std::invalid_argument & e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const std::out_of_range & e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const std::length_error & e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const nlohmann::json::exception & e) {
        std::cerr << "malformed input: " << e.what() << "\n";
        return usage;
    }
}

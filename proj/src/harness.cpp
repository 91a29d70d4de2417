#include <plabel/harness.hpp>

#include <plabel/choosability.hpp>
#include <plabel/errors.hpp>
#include <plabel/generators.hpp>
#include <plabel/incidence.hpp>
#include <plabel/solver.hpp>

#include <atomic>
#include <chrono>
#include <exception>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace plabel {

Family parse_family(std::string_view name)
{
    if (name == "path") return Family::path;
    if (name == "tree") return Family::tree;
    if (name == "star") return Family::star;
    if (name == "outerplanar") return Family::outerplanar;
    if (name == "random") return Family::random_graph;
    throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

std::string_view family_name(Family f)
{
    switch (f) {
    case Family::path: return "path";
    case Family::tree: return "tree";
    case Family::star: return "star";
    case Family::outerplanar: return "outerplanar";
    case Family::random_graph: return "random";
    }
    return "unknown";
}

AssignmentPolicy parse_policy(std::string_view name)
{
    if (name == "full-range") return AssignmentPolicy::full_range;
    if (name == "random-k") return AssignmentPolicy::random_k;
    if (name == "adversarial") return AssignmentPolicy::adversarial;
    throw std::invalid_argument("unknown assignment policy '" + std::string(name) + "'");
}

Conjecture parse_conjecture(std::string_view name)
{
    if (name == "general") return Conjecture::general;
    if (name == "outerplanar") return Conjecture::outerplanar;
    throw std::invalid_argument("unknown conjecture '" + std::string(name) + "'");
}

void ExperimentSpec::validate() const
{
    if (size_min > size_max || p_min > p_max)
        throw std::invalid_argument("experiment ranges must be non-empty");
    if (trials < 1)
        throw std::invalid_argument("trials must be at least 1");
    if (p_min < 0)
        throw std::invalid_argument("p must be non-negative");
    if (crosscheck_every < 1)
        throw std::invalid_argument("crosscheck interval must be positive");
}

namespace {

std::string format_ms(double ms)
{
    std::ostringstream out;
    out << std::fixed << std::setprecision(3) << ms;
    return out.str();
}

double elapsed_ms(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

} // namespace

std::string report_csv(const Report & report, bool include_time)
{
    std::string out = "instance,family,p,k,outcome,span,trials,failures,fallbacks,nodes";
    out += include_time ? ",time_ms\n" : "\n";
    for (const auto & r : report.rows) {
        out += r.instance + "," + r.family + "," + std::to_string(r.p) + "," + std::to_string(r.k) + "," + r.outcome
            + "," + std::to_string(r.span) + "," + std::to_string(r.trials) + "," + std::to_string(r.failures) + ","
            + std::to_string(r.fallbacks) + "," + std::to_string(r.nodes);
        out += include_time ? "," + format_ms(r.time_ms) + "\n" : "\n";
    }
    return out;
}

Json report_json(const Report & report, bool include_time)
{
    Json rows = Json::array();
    for (const auto & r : report.rows) {
        Json row{{"instance", r.instance}, {"family", r.family}, {"p", r.p}, {"k", r.k}, {"outcome", r.outcome},
                {"span", r.span}, {"trials", r.trials}, {"failures", r.failures}, {"fallbacks", r.fallbacks},
                {"nodes", r.nodes}};
        if (include_time)
            row["time_ms"] = r.time_ms;
        if (! r.certificate.is_null())
            row["certificate"] = r.certificate;
        rows.push_back(std::move(row));
    }
    return Json{{"suite", report.suite}, {"passed", report.passed()}, {"failures", report.failures},
            {"theorem_violations", report.theorem_violations}, {"fallbacks", report.fallbacks},
            {"full_resolves", report.full_resolves}, {"rows", std::move(rows)}};
}

ListAssignment random_assignment(const Graph & g, int k, int universe, Rng & rng)
{
    ListAssignment lists;
    for (const auto & x : elements(g))
        lists.set(x, random_subset(rng, k, 0, universe));
    return lists;
}

Graph sample_graph(Family family, int size, Rng & rng)
{
    switch (family) {
    case Family::path: return make_path(size);
    case Family::star: return make_star(size);
    case Family::tree: return make_random_tree(size, rng());
    case Family::outerplanar: return make_random_maximal_outerplanar(size, rng());
    case Family::random_graph: {
        // connected G(n, 1/2) by rejection
        for (int attempt = 0; attempt < 1000; ++attempt) {
            std::vector<Edge> edges;
            for (int v = 1; v < size; ++v)
                for (int u = 0; u < v; ++u)
                    if (rng() & 1)
                        edges.push_back({u, v});
            Graph g(size, std::move(edges));
            if (g.is_connected())
                return g;
        }
        return make_path(size);
    }
    }
    throw std::invalid_argument("unknown family");
}

int guaranteed_list_size(Family family, const Graph & g, int p)
{
    switch (family) {
    case Family::path: return 2 * p + 1;
    case Family::star: return g.size() + 2 * p - 1;
    case Family::tree: return std::max(g.max_degree(), 2) + 2 * p - 1;
    case Family::outerplanar: return g.max_degree() + 2 * p - 1;
    case Family::random_graph: return g.max_degree() + 2 * p;
    }
    throw std::invalid_argument("unknown family");
}

Construction run_labeller(Family family, const Graph & g, int p, const ListAssignment & lists)
{
    switch (family) {
    case Family::path: return label_path_greedy(g, p, lists);
    case Family::tree: return label_tree_dfs(g, p, lists);
    case Family::star: return label_star_list(g, p, lists);
    case Family::outerplanar: return label_outerplanar_list(g, p, lists);
    case Family::random_graph: break;
    }
    throw std::invalid_argument("no constructive labeller for family '" + std::string(family_name(family)) + "'");
}

void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)> & body)
{
    if (workers == 0)
        workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto run = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                body(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (! error)
                    error = std::current_exception();
            }
        }
    };
    if (workers <= 1) {
        run();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(run);
    }
    if (error)
        std::rethrow_exception(error);
}

namespace {

Json optimum_certificate(const Graph & g, int p, const SpanOptimum & opt)
{
    Json cert = labelling_certificate(g, p, opt.labelling);
    cert["claimed_lambda"] = opt.lambda;
    return cert;
}

void add_oracle_row(Report & report, ReportRow row, int expected)
{
    row.outcome = row.span == expected ? "match" : "mismatch";
    if (row.span != expected) {
        row.failures = 1;
        ++report.failures;
    }
    report.rows.push_back(std::move(row));
}

} // namespace

Report run_oracle_suite(int p_min, int p_max, int size_min, int size_max)
{
    if (p_min < 1 || p_min > p_max || size_min < 1 || size_min > size_max)
        throw std::invalid_argument("oracle suite needs 1 <= p_min <= p_max and 1 <= size_min <= size_max");
    Report report;
    report.suite = "oracle";

    for (int p = p_min; p <= p_max; ++p) {
        for (int k = std::max(2, size_min); k <= size_max; ++k) {
            const auto start = std::chrono::steady_clock::now();
            const Graph path = make_path(k);
            const auto opt = min_span(path, p);
            ReportRow row{"P" + std::to_string(k) + "/chi", "path", p, k == 2 ? p + 2 : p + 3};
            row.span = opt.chi();
            row.nodes = opt.nodes;
            row.time_ms = elapsed_ms(start);
            row.certificate = optimum_certificate(path, p, opt);
            add_oracle_row(report, std::move(row), k == 2 ? p + 2 : p + 3);

            // incidence bridge: L(p,1) span of the subdivided path
            const auto im = incidence_graph(path);
            const auto lp1 = lp1_min_span(im.derived, p);
            ReportRow bridge{"P" + std::to_string(k) + "/bridge", "path", p, opt.lambda};
            bridge.span = lp1.lambda;
            bridge.nodes = lp1.nodes;
            const auto back = transport_from_incidence(im, lp1.labelling);
            if (! is_valid(path, p, back, true)) {
                bridge.span = -1;
            }
            add_oracle_row(report, std::move(bridge), opt.lambda);
        }

        // L(p,1) chromatic numbers of bare paths
        for (int k = std::max(2, size_min); k <= size_max; ++k) {
            const Graph path = make_path(k);
            const auto opt = lp1_min_span(path, p);
            const int expected = k == 2 ? p + 1 : (k <= 4 ? p + 2 : p + 3);
            ReportRow row{"P" + std::to_string(k) + "/lp1-chi", "path", p, expected};
            row.span = opt.chi();
            row.nodes = opt.nodes;
            add_oracle_row(report, std::move(row), expected);
        }

        for (int n = size_min; n <= size_max; ++n) {
            const auto start = std::chrono::steady_clock::now();
            const Graph star = make_star(n);
            const auto opt = min_span(star, p);
            const int expected = p < n ? n + p : n + p + 1;
            ReportRow row{"K1," + std::to_string(n) + "/chi", "star", p, expected};
            row.span = opt.chi();
            row.nodes = opt.nodes;
            row.time_ms = elapsed_ms(start);
            row.certificate = optimum_certificate(star, p, opt);
            add_oracle_row(report, std::move(row), expected);

            // bipartite band Delta+p-1 <= lambda <= Delta+p
            ReportRow band{"K1," + std::to_string(n) + "/band", "star", p, n + p};
            band.span = opt.lambda;
            const bool inside = opt.lambda >= n + p - 1 && opt.lambda <= n + p;
            band.outcome = inside ? "match" : "mismatch";
            if (! inside) {
                band.failures = 1;
                ++report.failures;
            }
            report.rows.push_back(std::move(band));
        }
    }
    return report;
}

namespace {

struct TrialResult {
    bool failed = false;
    bool violation = false;
    int fallbacks = 0;
    int full_resolves = 0;
    int span = 0;
    std::uint64_t nodes = 0;
    double time_ms = 0.0;
    Json certificate;
};

int universe_for(const ExperimentSpec & spec, int k, int p)
{
    switch (spec.policy) {
    case AssignmentPolicy::full_range: return k - 1;
    case AssignmentPolicy::adversarial: return k;
    case AssignmentPolicy::random_k: break;
    }
    const int slack = spec.slack >= 0 ? spec.slack : 2 * p + 1;
    return k - 1 + slack;
}

Graph sample_for_property(const ExperimentSpec & spec, int size, int p, Rng & rng)
{
    if (spec.family != Family::outerplanar)
        return sample_graph(spec.family, size, rng);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        Graph g = make_random_maximal_outerplanar(size, rng());
        if (g.max_degree() >= p + 3)
            return g;
    }
    // the fan on size-1 path vertices has a hub of degree size-1
    Graph fan = make_fan(size - 1);
    if (fan.max_degree() < p + 3)
        throw std::invalid_argument("no maximal outerplanar graph on " + std::to_string(size)
                + " vertices has Delta >= p+3");
    return fan;
}

Json failure_certificate(const Graph & g, int p, const ListAssignment & lists, const std::string & reason)
{
    Json j{{"kind", "construction-failure"}, {"reason", reason}, {"graph", graph_to_json(g)}, {"p", p}};
    j["lists"] = lists_to_json(p, lists).at("lists");
    return j;
}

} // namespace

Report run_property_suite(const ExperimentSpec & spec)
{
    spec.validate();
    Report report;
    report.suite = "props/" + std::string(family_name(spec.family));

    struct Point {
        int size;
        int p;
    };
    std::vector<Point> points;
    for (int p = spec.p_min; p <= spec.p_max; ++p)
        for (int size = spec.size_min; size <= spec.size_max; ++size)
            points.push_back({size, p});

    const auto trials = static_cast<std::size_t>(spec.trials);
    std::vector<TrialResult> results(points.size() * trials);
    std::vector<int> list_sizes(points.size() * trials, 0);

    parallel_for(results.size(), spec.workers, [&](std::size_t index) {
        const auto & pt = points[index / trials];
        const auto t = index % trials;
        Rng rng(mix_seed(spec.seed, index));
        auto & out = results[index];
        const auto start = std::chrono::steady_clock::now();

        const Graph g = sample_for_property(spec, pt.size, pt.p, rng);
        const int k = guaranteed_list_size(spec.family, g, pt.p);
        list_sizes[index] = k;
        const ListAssignment lists = spec.policy == AssignmentPolicy::full_range
                ? ListAssignment::full(g, 0, k - 1)
                : random_assignment(g, k, universe_for(spec, k, pt.p), rng);
        try {
            auto built = run_labeller(spec.family, g, pt.p, lists);
            out.fallbacks = built.audit.fallbacks();
            out.full_resolves = built.audit.full_resolves;
            out.span = built.labelling.span();
            if (! is_valid(g, pt.p, built.labelling, true) || ! respects_lists(built.labelling, lists)) {
                out.failed = true;
                out.certificate = failure_certificate(g, pt.p, lists, "invalid labelling");
            } else if (t % static_cast<std::size_t>(spec.crosscheck_every) == 0
                    && element_count(g) <= spec.crosscheck_max_elements) {
                auto exact = solve_list(g, pt.p, lists);
                out.nodes = exact.stats.nodes;
                if (! exact.labelled()) {
                    out.failed = true;
                    out.certificate = failure_certificate(g, pt.p, lists, "exact solver disagrees");
                }
            }
        } catch (const TheoremViolation & e) {
            out.failed = true;
            out.violation = true;
            out.certificate = failure_certificate(g, pt.p, lists, e.what());
        }
        out.time_ms = elapsed_ms(start);
    });

    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto & pt = points[i];
        ReportRow row;
        row.instance = std::string(family_name(spec.family)) + "-n" + std::to_string(pt.size) + "-p" + std::to_string(pt.p);
        row.family = family_name(spec.family);
        row.p = pt.p;
        row.trials = spec.trials;
        for (std::size_t t = 0; t < trials; ++t) {
            const auto & r = results[i * trials + t];
            row.k = std::max(row.k, list_sizes[i * trials + t]);
            row.span = std::max(row.span, r.span);
            row.fallbacks += r.fallbacks;
            row.nodes += r.nodes;
            row.time_ms += r.time_ms;
            report.full_resolves += r.full_resolves;
            if (r.violation)
                ++report.theorem_violations;
            if (r.failed) {
                ++row.failures;
                if (row.certificate.is_null())
                    row.certificate = r.certificate;
            }
        }
        row.outcome = row.failures == 0 ? "pass" : "fail";
        report.failures += row.failures;
        report.fallbacks += row.fallbacks;
        report.rows.push_back(std::move(row));
    }
    return report;
}

Report hunt_counterexamples(Conjecture conjecture, const ExperimentSpec & spec)
{
    spec.validate();
    Report report;
    report.suite = conjecture == Conjecture::general ? "hunt/general" : "hunt/outerplanar";

    struct Instance {
        int size;
        int p;
        int trial;
    };
    std::vector<Instance> instances;
    for (int p = spec.p_min; p <= spec.p_max; ++p)
        for (int size = spec.size_min; size <= spec.size_max; ++size)
            for (int t = 0; t < spec.trials; ++t)
                instances.push_back({size, p, t});

    std::vector<ReportRow> rows(instances.size());
    parallel_for(instances.size(), spec.workers, [&](std::size_t index) {
        const auto & inst = instances[index];
        Rng rng(mix_seed(spec.seed, index));
        auto & row = rows[index];
        row.p = inst.p;
        const Family family = conjecture == Conjecture::general ? spec.family : Family::outerplanar;
        row.instance = std::string(family_name(family)) + "-n" + std::to_string(inst.size) + "-p"
            + std::to_string(inst.p) + "-t" + std::to_string(inst.trial);
        row.family = family_name(family);
        const auto start = std::chrono::steady_clock::now();

        std::optional<Graph> g;
        if (conjecture == Conjecture::general) {
            g = sample_graph(spec.family, inst.size, rng);
        } else {
            for (int attempt = 0; attempt < 1000 && ! g; ++attempt) {
                Graph cand = make_random_maximal_outerplanar(inst.size, rng());
                if (cand.max_degree() <= inst.p + 2)
                    g = std::move(cand);
            }
        }
        if (! g) {
            row.outcome = "no-instance";
            return;
        }
        const int k = conjecture == Conjecture::general ? g->max_degree() + 2 * inst.p
                                                        : g->max_degree() + 2 * inst.p - 1;
        row.k = k;
        WitnessSearch search;
        search.k = k;
        search.universe = spec.slack >= 0 ? k - 1 + spec.slack : default_universe(k);
        search.budget = spec.budget;
        search.order = spec.policy == AssignmentPolicy::random_k ? SearchOrder::random : SearchOrder::lexicographic;
        search.seed = mix_seed(spec.seed ^ 0x5eedULL, index);
        const auto cert = find_bad_assignment(*g, inst.p, search);
        row.outcome = std::string(certificate_kind_name(cert.kind));
        row.trials = static_cast<int>(cert.checked);
        row.certificate = certificate_to_json(cert);
        if (cert.kind == CertificateKind::lower_witness)
            row.failures = 1;
        row.time_ms = elapsed_ms(start);
    });

    for (auto & row : rows) {
        report.failures += row.failures;
        report.rows.push_back(std::move(row));
    }
    return report;
}

} // namespace plabel

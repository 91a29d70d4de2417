#include <plabel/choosability.hpp>

#include <plabel/errors.hpp>
#include <plabel/random.hpp>
#include <plabel/solver.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace plabel {

namespace {

constexpr std::size_t max_combinations = 2'000'000;

std::vector<std::vector<Color>> k_subsets(int k, int universe)
{
    std::vector<std::vector<Color>> out;
    std::vector<Color> cur(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        cur[i] = i;
    while (true) {
        out.push_back(cur);
        if (out.size() > max_combinations)
            throw std::length_error("too many " + std::to_string(k) + "-subsets of {0.." + std::to_string(universe) + "}");
        int i = k - 1;
        while (i >= 0 && cur[i] == universe - (k - 1 - i))
            --i;
        if (i < 0)
            return out;
        ++cur[i];
        for (int j = i + 1; j < k; ++j)
            cur[j] = cur[j - 1] + 1;
    }
}

void validate(int k, int universe, std::uint64_t budget)
{
    if (k < 1)
        throw std::invalid_argument("k must be at least 1");
    if (universe < k - 1)
        throw std::invalid_argument("universe {0.." + std::to_string(universe) + "} too small for "
                + std::to_string(k) + "-lists");
    if (budget == 0)
        throw std::invalid_argument("budget must be positive");
}

bool orbit_minimal(const std::vector<int> & digits, const std::vector<std::vector<int>> & perms)
{
    std::vector<int> image(digits.size());
    for (std::size_t a = 1; a < perms.size(); ++a) {
        const auto & pi = perms[a];
        for (std::size_t i = 0; i < digits.size(); ++i)
            image[pi[i]] = digits[i];
        if (image < digits)
            return false;
    }
    return true;
}

ListAssignment assemble(const std::vector<Element> & elems, const std::vector<std::vector<Color>> & combos,
        const std::vector<int> & digits)
{
    ListAssignment lists;
    for (std::size_t i = 0; i < elems.size(); ++i)
        lists.set(elems[i], combos[digits[i]]);
    return lists;
}

Certificate base_certificate(const Graph & g, int p, const WitnessSearch & s)
{
    Certificate cert;
    cert.graph = g;
    cert.p = p;
    cert.k = s.k;
    cert.universe = s.universe;
    cert.order = s.order;
    cert.seed = s.seed;
    cert.budget = s.budget;
    cert.normalization.push_back("min-color-zero");
    return cert;
}

Certificate lexicographic_search(const Graph & g, int p, const WitnessSearch & s)
{
    Certificate cert = base_certificate(g, p, s);
    const auto elems = elements(g);
    const auto combos = k_subsets(s.k, s.universe);

    std::vector<std::vector<int>> perms;
    if (s.use_automorphisms) {
        perms = element_automorphisms(g);
        cert.normalization.push_back("automorphism-orbit-minimum:" + std::to_string(perms.size()));
    }
    if (s.shard_count > 1)
        cert.normalization.push_back("shard:" + std::to_string(s.shard_index) + "/" + std::to_string(s.shard_count));

    if (elems.empty()) {
        cert.complete = true;
        return cert;
    }

    // odometer: element 0 is the most significant digit
    std::vector<int> digits(elems.size(), 0);
    const int base = static_cast<int>(combos.size());
    std::uint64_t ordinal = 0;
    while (true) {
        const bool normalized = std::any_of(digits.begin(), digits.end(), [&](int d) { return combos[d].front() == 0; });
        if (normalized && (! s.use_automorphisms || orbit_minimal(digits, perms))) {
            if (ordinal++ % s.shard_count == s.shard_index) {
                if (cert.checked == s.budget)
                    return cert;
                ++cert.checked;
                auto lists = assemble(elems, combos, digits);
                if (! solve_list(g, p, lists).labelled()) {
                    cert.kind = CertificateKind::lower_witness;
                    cert.assignment = std::move(lists);
                    return cert;
                }
            }
        }
        int i = static_cast<int>(digits.size()) - 1;
        while (i >= 0 && digits[i] == base - 1)
            digits[i--] = 0;
        if (i < 0) {
            cert.complete = true;
            return cert;
        }
        ++digits[i];
    }
}

Certificate random_search(const Graph & g, int p, const WitnessSearch & s)
{
    Certificate cert = base_certificate(g, p, s);
    cert.normalization.push_back("shift-to-zero");
    const auto elems = elements(g);
    Rng rng(s.seed);
    for (std::uint64_t t = 0; t < s.budget; ++t) {
        std::vector<std::vector<Color>> drawn;
        Color lowest = s.universe;
        for (std::size_t i = 0; i < elems.size(); ++i) {
            drawn.push_back(random_subset(rng, s.k, 0, s.universe));
            lowest = std::min(lowest, drawn.back().front());
        }
        ListAssignment lists;
        for (std::size_t i = 0; i < elems.size(); ++i) {
            for (auto & c : drawn[i])
                c -= lowest;
            lists.set(elems[i], std::move(drawn[i]));
        }
        ++cert.checked;
        if (! solve_list(g, p, lists).labelled()) {
            cert.kind = CertificateKind::lower_witness;
            cert.assignment = std::move(lists);
            return cert;
        }
    }
    return cert;
}

} // namespace

Certificate find_bad_assignment(const Graph & g, int p, const WitnessSearch & search)
{
    validate(search.k, search.universe, search.budget);
    if (search.shard_count == 0 || search.shard_index >= search.shard_count)
        throw std::invalid_argument("bad shard specification");
    if (search.order == SearchOrder::random)
        return random_search(g, p, search);
    return lexicographic_search(g, p, search);
}

double assignment_space_size(const Graph & g, int k, int universe)
{
    // log-space binomial keeps large cases finite-ish
    const double log_binom = std::lgamma(universe + 2.0) - std::lgamma(k + 1.0) - std::lgamma(universe - k + 2.0);
    return std::exp(log_binom * element_count(g));
}

Certificate certify_choosable(const Graph & g, int p, int k, int universe, double max_assignments)
{
    validate(k, universe, 1);
    const double estimate = assignment_space_size(g, k, universe);
    if (estimate > max_assignments) {
        std::ostringstream msg;
        msg << "instance too large: about " << estimate << " raw " << k << "-assignments over {0.." << universe
            << "} (limit " << max_assignments << ")";
        throw std::length_error(msg.str());
    }
    WitnessSearch s;
    s.k = k;
    s.universe = universe;
    s.budget = static_cast<std::uint64_t>(estimate) + 1;
    s.use_automorphisms = true;
    Certificate cert = lexicographic_search(g, p, s);
    if (cert.kind == CertificateKind::exhausted) {
        if (! cert.complete)
            throw std::logic_error("certify_choosable: enumeration stopped early");
        cert.kind = CertificateKind::upper_certified;
    }
    return cert;
}

std::vector<std::vector<int>> element_automorphisms(const Graph & g, std::size_t cap)
{
    const int n = g.order();
    std::vector<std::vector<int>> vertex_maps;
    std::vector<int> map(static_cast<std::size_t>(n), -1);
    std::vector<char> used(static_cast<std::size_t>(n), 0);

    // assign images in vertex order; adjacency to earlier vertices must match
    auto extend = [&](auto && self, int v) -> void {
        if (vertex_maps.size() >= cap)
            return;
        if (v == n) {
            vertex_maps.push_back(map);
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (used[w] || g.degree(w) != g.degree(v))
                continue;
            bool fits = true;
            for (int u = 0; u < v && fits; ++u)
                fits = g.adjacent(u, v) == g.adjacent(map[u], w);
            if (! fits)
                continue;
            map[v] = w;
            used[w] = 1;
            self(self, v + 1);
            used[w] = 0;
            map[v] = -1;
        }
    };
    extend(extend, 0);

    std::vector<std::vector<int>> out;
    for (const auto & sigma : vertex_maps) {
        std::vector<int> perm(static_cast<std::size_t>(element_count(g)));
        for (int v = 0; v < n; ++v)
            perm[v] = sigma[v];
        for (int i = 0; i < g.size(); ++i) {
            const auto & e = g.edges()[i];
            perm[n + i] = n + *g.edge_index(sigma[e.u], sigma[e.v]);
        }
        out.push_back(std::move(perm));
    }
    // identity comes first
    return out;
}

std::string_view certificate_kind_name(CertificateKind kind)
{
    switch (kind) {
    case CertificateKind::upper_certified: return "upper-certified";
    case CertificateKind::lower_witness: return "lower-witness";
    case CertificateKind::exhausted: return "exhausted";
    }
    return "unknown";
}

Json certificate_to_json(const Certificate & cert)
{
    Json j;
    j["kind"] = certificate_kind_name(cert.kind);
    j["graph"] = graph_to_json(cert.graph);
    j["p"] = cert.p;
    j["k"] = cert.k;
    j["U"] = cert.universe;
    j["checked"] = cert.checked;
    j["complete"] = cert.complete;
    j["order"] = cert.order == SearchOrder::random ? "random" : "lexicographic";
    j["seed"] = cert.seed;
    j["budget"] = cert.budget;
    j["normalization"] = cert.normalization;
    if (cert.assignment)
        j["assignment"] = lists_to_json(cert.p, *cert.assignment).at("lists");
    return j;
}

Certificate certificate_from_json(const Json & j)
{
    Certificate cert;
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "upper-certified")
        cert.kind = CertificateKind::upper_certified;
    else if (kind == "lower-witness")
        cert.kind = CertificateKind::lower_witness;
    else if (kind == "exhausted")
        cert.kind = CertificateKind::exhausted;
    else
        throw std::invalid_argument("unknown certificate kind '" + kind + "'");
    cert.graph = graph_from_json(j.at("graph"));
    cert.p = j.at("p").get<int>();
    cert.k = j.at("k").get<int>();
    cert.universe = j.at("U").get<int>();
    cert.checked = j.at("checked").get<std::uint64_t>();
    cert.complete = j.value("complete", false);
    cert.order = j.value("order", std::string("lexicographic")) == "random" ? SearchOrder::random : SearchOrder::lexicographic;
    cert.seed = j.value("seed", std::uint64_t{0});
    cert.budget = j.value("budget", std::uint64_t{0});
    cert.normalization = j.value("normalization", std::vector<std::string>{});
    if (j.contains("assignment"))
        cert.assignment = lists_from_json(Json{{"lists", j.at("assignment")}});
    return cert;
}

Json labelling_certificate(const Graph & g, int p, const TotalLabelling & c, const ListAssignment * lists)
{
    Json j;
    j["kind"] = "labelling";
    j["graph"] = graph_to_json(g);
    j["p"] = p;
    j["labels"] = labelling_to_json(p, c).at("labels");
    if (lists)
        j["lists"] = lists_to_json(p, *lists).at("lists");
    return j;
}

namespace {

bool uses_automorphisms(const Certificate & cert)
{
    return std::any_of(cert.normalization.begin(), cert.normalization.end(),
            [](const std::string & s) { return s.rfind("automorphism", 0) == 0; });
}

} // namespace

RecheckResult recheck(const Certificate & cert)
{
    switch (cert.kind) {
    case CertificateKind::lower_witness: {
        if (! cert.assignment)
            return {false, "witness certificate without an assignment"};
        const auto & lists = *cert.assignment;
        if (! lists.covers_exactly(cert.graph))
            return {false, "assignment does not cover exactly the graph's elements"};
        if (lists.uniform_size() != cert.k)
            return {false, "assignment is not a " + std::to_string(cert.k) + "-assignment"};
        if (*lists.min_color() < 0 || *lists.max_color() > cert.universe)
            return {false, "assignment leaves the universe {0.." + std::to_string(cert.universe) + "}"};
        auto r = solve_list(cert.graph, cert.p, lists);
        if (r.labelled())
            return {false, "assignment is labelable; not a witness"};
        return {true, "witness confirmed infeasible (" + std::to_string(r.stats.nodes) + " nodes)"};
    }
    case CertificateKind::upper_certified: {
        auto again = certify_choosable(cert.graph, cert.p, cert.k, cert.universe);
        if (again.kind != CertificateKind::upper_certified)
            return {false, "re-enumeration found a witness"};
        if (again.checked != cert.checked)
            return {false, "re-enumeration checked " + std::to_string(again.checked) + " assignments, certificate says "
                    + std::to_string(cert.checked)};
        return {true, "re-enumerated " + std::to_string(again.checked) + " assignments"};
    }
    case CertificateKind::exhausted: {
        WitnessSearch s;
        s.k = cert.k;
        s.universe = cert.universe;
        s.budget = cert.budget;
        s.order = cert.order;
        s.seed = cert.seed;
        s.use_automorphisms = uses_automorphisms(cert);
        for (const auto & tag : cert.normalization)
            if (tag.rfind("shard:", 0) == 0) {
                const auto slash = tag.find('/');
                s.shard_index = std::stoull(tag.substr(6, slash - 6));
                s.shard_count = std::stoull(tag.substr(slash + 1));
            }
        auto again = find_bad_assignment(cert.graph, cert.p, s);
        if (again.kind != CertificateKind::exhausted || again.checked != cert.checked)
            return {false, "re-run of the search disagrees with the certificate"};
        return {true, "re-ran search over " + std::to_string(again.checked) + " assignments"};
    }
    }
    return {false, "unknown certificate kind"};
}

RecheckResult recheck_json(const Json & j)
{
    if (j.value("kind", std::string()) != "labelling")
        return recheck(certificate_from_json(j));

    const Graph g = graph_from_json(j.at("graph"));
    const int p = j.at("p").get<int>();
    const auto c = labelling_from_json(j);
    auto verdict = is_valid(g, p, c, true);
    if (! verdict)
        return {false, std::to_string(verdict.violations.size()) + " violations, first: "
                + std::string(constraint_name(verdict.violations.front().kind)) + " "
                + verdict.violations.front().first.key() + " / " + verdict.violations.front().second.key()};
    if (j.contains("lists") && ! respects_lists(c, lists_from_json(Json{{"lists", j.at("lists")}})))
        return {false, "labelling leaves its lists"};
    if (j.contains("claimed_lambda")) {
        const int claimed = j.at("claimed_lambda").get<int>();
        if (! c.empty() && (c.min_color() < 0 || c.max_color() > claimed))
            return {false, "labels leave {0.." + std::to_string(claimed) + "}"};
        if (claimed > 0 && solve_span(g, p, claimed - 1).labelled())
            return {false, "span " + std::to_string(claimed - 1) + " is feasible, claimed optimum is not minimal"};
        return {true, "labelling valid, optimal span " + std::to_string(claimed)};
    }
    return {true, "labelling valid, span " + std::to_string(c.span())};
}

} // namespace plabel

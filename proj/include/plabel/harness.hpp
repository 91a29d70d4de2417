#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <plabel/constructive.hpp>
#include <plabel/graph.hpp>
#include <plabel/labelling.hpp>
#include <plabel/random.hpp>
#include <plabel/serialization.hpp>

namespace plabel {

enum class Family { path, tree, star, outerplanar, random_graph };

enum class AssignmentPolicy {
    // every list is {0..k-1}
    full_range,
    // k-subsets of {0..k-1+slack}
    random_k,
    // k-subsets of {0..k}: maximal overlap between lists
    adversarial,
};

Family parse_family(std::string_view name);
std::string_view family_name(Family f);
AssignmentPolicy parse_policy(std::string_view name);

struct ExperimentSpec {
    Family family = Family::path;
    int size_min = 2;
    int size_max = 8;
    int p_min = 1;
    int p_max = 3;
    AssignmentPolicy policy = AssignmentPolicy::random_k;
    int trials = 1000;
    std::uint64_t seed = 1;
    // witness-search budget for hunts
    std::uint64_t budget = 2000;
    // random_k draws from {0..k-1+slack}; negative means 2p + 1, i.e. U = k + 2p
    int slack = -1;
    // every n-th trial is re-solved exactly when small enough
    int crosscheck_every = 25;
    int crosscheck_max_elements = 16;
    // 0 = hardware concurrency
    unsigned workers = 0;
    bool include_timing = false;

    // Throws std::invalid_argument on empty ranges or trials < 1.
    void validate() const;
};

struct ReportRow {
    std::string instance;
    std::string family;
    int p = 0;
    int k = 0;
    std::string outcome;
    int span = 0;
    int trials = 1;
    int failures = 0;
    int fallbacks = 0;
    std::uint64_t nodes = 0;
    double time_ms = 0.0;
    // re-checkable evidence for the row's claim (null when not applicable)
    Json certificate;
};

struct Report {
    std::string suite;
    std::vector<ReportRow> rows;
    int failures = 0;
    int theorem_violations = 0;
    int fallbacks = 0;
    // exact whole-graph re-solves inside constructive labellers
    int full_resolves = 0;

    bool passed() const noexcept { return failures == 0 && theorem_violations == 0 && full_resolves == 0; }
};

std::string report_csv(const Report & report, bool include_time = false);
Json report_json(const Report & report, bool include_time = false);

// k-subsets of {0..universe} per element.
ListAssignment random_assignment(const Graph & g, int k, int universe, Rng & rng);

// Graph of the family with the given size parameter (path/tree/outerplanar/
// random: vertex count; star: leaf count).
Graph sample_graph(Family family, int size, Rng & rng);

// The list size the family's constructive guarantee needs.
int guaranteed_list_size(Family family, const Graph & g, int p);

Construction run_labeller(Family family, const Graph & g, int p, const ListAssignment & lists);

// Runs body(i) for i in [0, count) on a worker pool. Exceptions are
// rethrown on the caller after all workers finish.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)> & body);

// Exact spans of paths and stars against their closed forms, L(p,1) spans
// of paths, the incidence bridge on paths, and the bipartite band on stars.
Report run_oracle_suite(int p_min, int p_max, int size_min, int size_max);

// Constructive labellers over assignments of the guaranteed sizes.
Report run_property_suite(const ExperimentSpec & spec);

enum class Conjecture {
    // C(G) <= Delta + 2p for every graph
    general,
    // C(G) <= Delta + 2p - 1 for outerplanar G, tested where Delta <= p + 2
    outerplanar,
};

Conjecture parse_conjecture(std::string_view name);

// Witness search on sampled graphs at the conjectured bound; any witness is
// a counterexample and counts as a failure.
Report hunt_counterexamples(Conjecture conjecture, const ExperimentSpec & spec);

} // namespace plabel

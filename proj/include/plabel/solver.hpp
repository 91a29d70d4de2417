#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <plabel/graph.hpp>
#include <plabel/labelling.hpp>

namespace plabel {

struct SolveStats {
    std::uint64_t nodes = 0;
    double seconds = 0.0;
};

struct SolveResult {
    // Engaged iff a labelling exists; the labelling is total, valid and
    // within the lists that were given.
    std::optional<TotalLabelling> labelling;
    SolveStats stats;

    bool labelled() const noexcept { return labelling.has_value(); }
};

// Backtracking with forward checking over a generic separation network:
// variable i takes a value from domains[i], and each conflict {j, s} of i
// demands |value(i) - value(j)| >= s. Most constrained variable first (ties
// by index), values ascending. Returns one value per variable, or nullopt.
std::optional<std::vector<Color>> solve_network(const std::vector<std::vector<Conflict>> & conflicts,
        const std::vector<std::vector<Color>> & domains, std::uint64_t & nodes);

// Complete search for an L-(p,1)-total labelling. Elements labelled in
// `fixed` are pinned to that color regardless of their list.
SolveResult solve_list(const Graph & g, int p, const ListAssignment & lists,
        const TotalLabelling & fixed = {});

// k-(p,1)-total labelling with colors in {0..k}.
SolveResult solve_span(const Graph & g, int p, int k);

struct SpanOptimum {
    int lambda = 0;
    TotalLabelling labelling;
    // spans proven infeasible on the way up
    std::vector<int> infeasible;
    std::uint64_t nodes = 0;

    int chi() const noexcept { return lambda + 1; }
};

// Smallest span, scanning k upward from the trivial lower bound
// (Delta + p - 1 when p >= 1 and g has an edge).
SpanOptimum min_span(const Graph & g, int p);
int lambda(const Graph & g, int p);
int chi(const Graph & g, int p);

// L(p,1) labelling of the vertices of g with labels in {0..k}.
SolveResult lp1_solve_span(const Graph & g, int p, int k);
SpanOptimum lp1_min_span(const Graph & g, int p);

// Lower bound used to start the span scans.
int span_lower_bound(const Graph & g, int p);

} // namespace plabel

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <plabel/graph.hpp>
#include <plabel/labelling.hpp>

namespace plabel {

// Size of an available-color list at one extension step, next to the lower
// bound the counting argument promises for it.
struct ReducedListRecord {
    std::string step;
    Element element;
    int size = 0;
    int bound = 0;
};

// Audit trail of a constructive run.
struct Audit {
    // configuration / step sequence, in the order extensions were applied
    std::vector<std::string> steps;
    std::vector<ReducedListRecord> reductions;
    // C3: pair search failed before the interchange
    int interchanges = 0;
    // C3: stuck lists matched the interval shape {m..m+p} / {m+1..m+p-1}
    int stuck_shapes = 0;
    // swap produced an invalid partial labelling and was undone
    int invalid_swaps = 0;
    // exact re-solve of the configuration's neighbourhood
    int local_resolves = 0;
    // exact re-solve of the whole working graph
    int full_resolves = 0;
    // star algorithm: center colors tried
    int center_attempts = 0;

    int fallbacks() const noexcept { return local_resolves + full_resolves; }
};

struct Construction {
    TotalLabelling labelling;
    Audit audit;
};

// Greedy along the path: v1, e1, v2, e2, ...; each element takes its least
// available color. Needs p >= 1 and lists of size >= 2p+1.
Construction label_path_greedy(const Graph & g, int p, const ListAssignment & lists);

// Root 0 first, then depth-first; entering child c of u via e colors e and
// then c with their least available colors. Needs p >= 1 and lists of size
// >= max(Delta, 2)+2p-1.
Construction label_tree_dfs(const Graph & g, int p, const ListAssignment & lists);

// Star K_{1,n}, n >= 3, p >= 2, lists of size >= n+2p-1. The center takes
// colors of its list in ascending order; edges are colored by the
// protected-edge minimum-color loop, leaves last.
Construction label_star_list(const Graph & g, int p, const ListAssignment & lists);

// Span-optimal labelling of K_{1,n} (center 0, leaves 1..n). For p < n the
// explicit construction on {1..n+p}; for p >= n an exact optimum with span
// n+p.
TotalLabelling label_star_span(int n, int p);

struct ConfigurationMatch {
    enum class Kind { leaf, c1, c2, c3, not_found };

    Kind kind = Kind::not_found;
    // leaf: {v, u};  c1: {u, v};  c2: {u, v1, v2};  c3: {x, u1, v1, u2, v2}
    std::vector<Vertex> roles;

    std::string describe() const;
};

// Scans the non-isolated part of g: Leaf if some vertex has degree 1, then
// C1, C2, C3 in that order, least vertices first. Throws
// std::invalid_argument on a graph without vertices.
ConfigurationMatch find_configuration(const Graph & g);

// Recursive list labeller for outerplanar graphs with Delta >= p+3 and
// lists of size >= Delta+2p-1 (Delta of the input, fixed through the
// recursion). Outerplanarity is the caller's promise. Throws
// std::invalid_argument when Delta < p+3 or p < 1, ConfigurationNotFound
// when the input is not outerplanar, TheoremViolation if even an exact
// re-solve fails.
Construction label_outerplanar_list(const Graph & g, int p, const ListAssignment & lists);

} // namespace plabel

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <plabel/graph.hpp>
#include <plabel/incidence.hpp>

namespace plabel {

using Color = int;

// A vertex or an edge of a host graph. Ordered with all vertices before all
// edges, each group lexicographic; this is the canonical element order used
// by every solver, serializer and tie-break.
struct Element {
    enum class Kind : std::uint8_t { vertex = 0, edge = 1 };

    Kind kind = Kind::vertex;
    Vertex a = 0;
    Vertex b = 0;

    static Element vertex(Vertex v) { return {Kind::vertex, v, 0}; }
    static Element edge(Vertex u, Vertex v);
    static Element edge(const Edge & e) { return {Kind::edge, e.u, e.v}; }

    bool is_vertex() const noexcept { return kind == Kind::vertex; }
    bool is_edge() const noexcept { return kind == Kind::edge; }
    Edge as_edge() const { return {a, b}; }

    // "v:3" or "e:1-4"
    std::string key() const;
    static Element from_key(std::string_view key);

    auto operator<=>(const Element &) const = default;
};

bool contains(const Graph & g, const Element & x);

// Elements of g in canonical order: vertices 0..n-1, then edges in
// lexicographic order. Position i of this vector is the dense element index.
std::vector<Element> elements(const Graph & g);

inline int element_count(const Graph & g) { return g.order() + g.size(); }

// Dense index, or throws DomainError.
int element_index(const Graph & g, const Element & x);

// Partial map from elements to colors.
class TotalLabelling {
public:
    using Map = std::map<Element, Color>;

    TotalLabelling() = default;

    void set(const Element & x, Color c) { labels_[x] = c; }
    void erase(const Element & x) { labels_.erase(x); }
    std::optional<Color> get(const Element & x) const;
    Color at(const Element & x) const;
    bool contains(const Element & x) const { return labels_.count(x) != 0; }

    std::size_t size() const noexcept { return labels_.size(); }
    bool empty() const noexcept { return labels_.empty(); }
    Map::const_iterator begin() const { return labels_.begin(); }
    Map::const_iterator end() const { return labels_.end(); }

    // Largest color used minus smallest; 0 when empty.
    Color span() const;
    std::optional<Color> min_color() const;
    std::optional<Color> max_color() const;
    TotalLabelling shifted(Color offset) const;

    bool operator==(const TotalLabelling &) const = default;

private:
    Map labels_;
};

// Map from elements to non-empty sorted sets of allowed colors.
class ListAssignment {
public:
    using List = std::vector<Color>;
    using Map = std::map<Element, List>;

    ListAssignment() = default;

    // Sorts and deduplicates; throws std::invalid_argument on an empty list.
    void set(const Element & x, List colors);
    const List & at(const Element & x) const;
    bool contains(const Element & x) const { return lists_.count(x) != 0; }

    std::size_t size() const noexcept { return lists_.size(); }
    Map::const_iterator begin() const { return lists_.begin(); }
    Map::const_iterator end() const { return lists_.end(); }

    // k when every list has exactly k colors.
    std::optional<int> uniform_size() const;
    int min_list_size() const;
    std::optional<Color> min_color() const;
    std::optional<Color> max_color() const;
    ListAssignment shifted(Color offset) const;

    // True iff every element of g has a list and nothing else does.
    bool covers_exactly(const Graph & g) const;

    // Every element of g gets {lo..hi}.
    static ListAssignment full(const Graph & g, Color lo, Color hi);

    bool operator==(const ListAssignment &) const = default;

private:
    Map lists_;
};

// ||x||_p: the 2p-1 colors at distance < p from x (empty for p = 0).
std::vector<Color> p_ball(Color x, int p);

enum class Constraint {
    adjacent_vertices,
    adjacent_edges,
    vertex_edge_separation,
    unlabelled,
};

std::string_view constraint_name(Constraint c);

struct Violation {
    Constraint kind;
    Element first;
    Element second;

    bool operator==(const Violation &) const = default;
};

struct Verdict {
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }
    explicit operator bool() const noexcept { return ok(); }
};

// (p,1)-total validity over the labelled elements of c: adjacent vertices
// differ, adjacent edges differ, incident vertex/edge differ by at least p.
// With require_total every element of g must also be labelled. All
// violations are reported. Throws DomainError if c labels a foreign element.
Verdict is_valid(const Graph & g, int p, const TotalLabelling & c, bool require_total = false);

// Every labelled element's color lies in its list (unlisted elements fail).
bool respects_lists(const TotalLabelling & c, const ListAssignment & lists);

// L(p,1) validity of a vertex labelling (edge entries are rejected with
// DomainError): labels of adjacent vertices differ by at least p, labels of
// vertices at distance exactly two differ. Only labelled vertices count.
Verdict lp1_is_valid(const Graph & g, int p, const TotalLabelling & vertex_labels);

// Element-wise transport between a base graph and its incidence graph.
TotalLabelling transport_to_incidence(const IncidenceMap & im, const TotalLabelling & c);
ListAssignment transport_to_incidence(const IncidenceMap & im, const ListAssignment & lists);
TotalLabelling transport_from_incidence(const IncidenceMap & im, const TotalLabelling & c);
ListAssignment transport_from_incidence(const IncidenceMap & im, const ListAssignment & lists);

// Separation demanded between two elements of g by (p,1)-total validity:
// 0 if unconstrained, 1 for "must differ", p for an incident vertex/edge pair.
struct Conflict {
    int other;
    int separation;
};

// Dense constraint network over elements(g) for (p,1)-total labelling.
std::vector<std::vector<Conflict>> total_conflicts(const Graph & g, int p);

// Dense constraint network over the vertices of g for L(p,1)-labelling.
std::vector<std::vector<Conflict>> lp1_conflicts(const Graph & g, int p);

} // namespace plabel

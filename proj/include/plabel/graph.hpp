#pragma once

#include <compare>
#include <optional>
#include <span>
#include <vector>

namespace plabel {

using Vertex = int;

// Undirected edge, always stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    auto operator<=>(const Edge &) const = default;
};

// Normalizes the endpoint order; throws std::invalid_argument on a loop.
Edge make_edge(Vertex a, Vertex b);

// Simple undirected graph on vertices 0..n-1. Immutable once built; the edge
// list is kept sorted lexicographically and adjacency lists are sorted.
// Connectivity is not required.
class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count);

    // Throws std::invalid_argument on loops, duplicate edges or endpoints
    // outside 0..n-1.
    Graph(int vertex_count, std::vector<Edge> edges);

    int order() const noexcept { return n_; }
    int size() const noexcept { return static_cast<int>(edges_.size()); }
    bool has_vertex(Vertex v) const noexcept { return v >= 0 && v < n_; }

    const std::vector<Edge> & edges() const noexcept { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const;
    int degree(Vertex v) const;

    // 0 for the empty graph.
    int max_degree() const noexcept;
    int min_degree() const noexcept;

    bool adjacent(Vertex a, Vertex b) const;
    std::optional<int> edge_index(Vertex a, Vertex b) const;

    bool is_connected() const;
    bool is_tree() const;
    bool is_path() const;

    Graph without_edge(Vertex a, Vertex b) const;

    bool operator==(const Graph & other) const { return n_ == other.n_ && edges_ == other.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
};

} // namespace plabel

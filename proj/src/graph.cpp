#include <plabel/graph.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace plabel {

Edge make_edge(Vertex a, Vertex b)
{
    if (a == b)
        throw std::invalid_argument("loop at vertex " + std::to_string(a));
    return a < b ? Edge{a, b} : Edge{b, a};
}

Graph::Graph(int vertex_count) : Graph(vertex_count, {}) {}

Graph::Graph(int vertex_count, std::vector<Edge> edges) : n_(vertex_count)
{
    if (vertex_count < 0)
        throw std::invalid_argument("negative vertex count");

    for (auto & e : edges) {
        e = make_edge(e.u, e.v);
        if (! has_vertex(e.u) || ! has_vertex(e.v))
            throw std::invalid_argument("edge " + std::to_string(e.u) + "-" + std::to_string(e.v)
                    + " outside vertex range 0.." + std::to_string(n_ - 1));
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
        throw std::invalid_argument("duplicate edge " + std::to_string(dup->u) + "-" + std::to_string(dup->v));
    edges_ = std::move(edges);

    adjacency_.assign(static_cast<std::size_t>(n_), {});
    for (const auto & e : edges_) {
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
    }
    for (auto & a : adjacency_)
        std::sort(a.begin(), a.end());
}

std::span<const Vertex> Graph::neighbors(Vertex v) const
{
    if (! has_vertex(v))
        throw std::out_of_range("vertex " + std::to_string(v) + " not in graph");
    return adjacency_[v];
}

int Graph::degree(Vertex v) const
{
    return static_cast<int>(neighbors(v).size());
}

int Graph::max_degree() const noexcept
{
    int best = 0;
    for (const auto & a : adjacency_)
        best = std::max(best, static_cast<int>(a.size()));
    return best;
}

int Graph::min_degree() const noexcept
{
    if (n_ == 0)
        return 0;
    int best = n_;
    for (const auto & a : adjacency_)
        best = std::min(best, static_cast<int>(a.size()));
    return best;
}

bool Graph::adjacent(Vertex a, Vertex b) const
{
    if (a == b || ! has_vertex(a) || ! has_vertex(b))
        return false;
    const auto & adj = adjacency_[a];
    return std::binary_search(adj.begin(), adj.end(), b);
}

std::optional<int> Graph::edge_index(Vertex a, Vertex b) const
{
    if (a == b)
        return std::nullopt;
    const Edge e = make_edge(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e)
        return std::nullopt;
    return static_cast<int>(it - edges_.begin());
}

bool Graph::is_connected() const
{
    if (n_ <= 1)
        return true;
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (! stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : adjacency_[v])
            if (! seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == n_;
}

bool Graph::is_tree() const
{
    return n_ >= 1 && size() == n_ - 1 && is_connected();
}

bool Graph::is_path() const
{
    return is_tree() && max_degree() <= 2;
}

Graph Graph::without_edge(Vertex a, Vertex b) const
{
    const Edge e = make_edge(a, b);
    std::vector<Edge> kept;
    kept.reserve(edges_.size());
    bool found = false;
    for (const auto & f : edges_) {
        if (f == e)
            found = true;
        else
            kept.push_back(f);
    }
    if (! found)
        throw std::invalid_argument("no edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    return Graph(n_, std::move(kept));
}

} // namespace plabel

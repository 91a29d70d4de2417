#include <plabel/generators.hpp>
#include <plabel/random.hpp>

#include <stdexcept>
#include <string>

namespace plabel {

namespace {

void require_at_least(int value, int minimum, const char * what)
{
    if (value < minimum)
        throw std::invalid_argument(std::string(what) + " needs at least " + std::to_string(minimum)
                + ", got " + std::to_string(value));
}

} // namespace

Graph make_path(int k)
{
    require_at_least(k, 1, "path");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < k; ++i)
        edges.push_back({i, i + 1});
    return Graph(k, std::move(edges));
}

Graph make_star(int leaves)
{
    require_at_least(leaves, 1, "star");
    std::vector<Edge> edges;
    for (int i = 1; i <= leaves; ++i)
        edges.push_back({0, i});
    return Graph(leaves + 1, std::move(edges));
}

Graph make_cycle(int n)
{
    require_at_least(n, 3, "cycle");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        edges.push_back(make_edge(i, (i + 1) % n));
    return Graph(n, std::move(edges));
}

Graph make_fan(int n)
{
    require_at_least(n, 1, "fan");
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i) {
        edges.push_back({0, i});
        if (i < n)
            edges.push_back({i, i + 1});
    }
    return Graph(n + 1, std::move(edges));
}

Graph make_random_tree(int n, std::uint64_t seed)
{
    require_at_least(n, 1, "random tree");
    Rng rng(seed);
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i)
        edges.push_back({static_cast<Vertex>(draw_below(rng, static_cast<std::uint64_t>(i))), i});
    return Graph(n, std::move(edges));
}

Graph make_random_maximal_outerplanar(int n, std::uint64_t seed)
{
    require_at_least(n, 3, "maximal outerplanar graph");
    Rng rng(seed);
    std::vector<Vertex> cycle{0, 1, 2};
    std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 2}};
    for (int v = 3; v < n; ++v) {
        // outer edge (cycle[i], cycle[i+1 mod len]); insert v between them
        const auto i = static_cast<std::size_t>(draw_below(rng, cycle.size()));
        const Vertex a = cycle[i];
        const Vertex b = cycle[(i + 1) % cycle.size()];
        edges.push_back(make_edge(a, v));
        edges.push_back(make_edge(b, v));
        cycle.insert(cycle.begin() + static_cast<std::ptrdiff_t>(i + 1), v);
    }
    return Graph(n, std::move(edges));
}

} // namespace plabel

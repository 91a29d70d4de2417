#include <plabel/incidence.hpp>

namespace plabel {

IncidenceMap incidence_graph(const Graph & g)
{
    const int n = g.order();
    IncidenceMap im;
    im.base = g;
    im.vertex_image.resize(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v)
        im.vertex_image[v] = v;

    std::vector<Edge> edges;
    edges.reserve(2 * g.edges().size());
    for (int i = 0; i < g.size(); ++i) {
        const Edge & e = g.edges()[i];
        const Vertex w = n + i;
        im.edge_image.push_back(w);
        edges.push_back({e.u, w});
        edges.push_back({e.v, w});
    }
    im.derived = Graph(n + g.size(), std::move(edges));
    return im;
}

} // namespace plabel

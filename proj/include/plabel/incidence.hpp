#pragma once

#include <vector>

#include <plabel/graph.hpp>

namespace plabel {

// G with every edge subdivided once. Base vertices keep their indices; the
// subdivision vertex of the i-th edge (lexicographic order) is n + i.
struct IncidenceMap {
    Graph base;
    Graph derived;
    std::vector<Vertex> vertex_image;
    std::vector<Vertex> edge_image;
};

IncidenceMap incidence_graph(const Graph & g);

} // namespace plabel

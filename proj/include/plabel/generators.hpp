#pragma once

#include <cstdint>

#include <plabel/graph.hpp>

namespace plabel {

// P_k: vertices 0..k-1 in path order.
Graph make_path(int k);

// K_{1,n}: center 0, leaves 1..n.
Graph make_star(int leaves);

// C_n, n >= 3.
Graph make_cycle(int n);

// Hub 0 joined to every vertex of the path 1..n.
Graph make_fan(int n);

// Uniform random recursive tree: vertex i > 0 attaches to a uniform vertex
// below it. Deterministic in (n, seed).
Graph make_random_tree(int n, std::uint64_t seed);

// Random triangulation of a convex n-gon grown by ear insertion: starting
// from the triangle 0-1-2, each new vertex is placed on a uniformly chosen
// outer-cycle edge. Result has 2n-3 edges and a Hamiltonian outer cycle.
Graph make_random_maximal_outerplanar(int n, std::uint64_t seed);

} // namespace plabel

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "simint/graph.hpp"
#include "simint/reductions.hpp"

namespace simint {

using Rng = std::mt19937_64;

// One representative per isomorphism class of connected graphs on n vertices
// (1 <= n <= 6), the one whose edge mask is smallest.
std::vector<Graph> connected_graphs(int n);

// G(n, p) with edges inserted in lexicographic order.
Graph random_graph(int n, double p, Rng& rng);

// Random acyclic G with at most max_arcs arcs (ids respect a random order),
// split into arc-disjoint paths; H closes path ends to path starts under a
// random matching, so G+H is Eulerian. Returns nullopt when the draw produced
// a loop or a repeated H-arc.
std::optional<DisjointPathsInstance> random_dp_instance(int n, int max_arcs, Rng& rng);

// Every MISP instance with classes V_i = {i*q, ..., i*q+q-1} and m edges in
// every order, for the given k, q, m.
std::vector<MispInstance> all_misp_instances(int k, int q, int m);

}  // namespace simint

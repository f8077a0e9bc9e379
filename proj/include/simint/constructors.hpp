#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "simint/graph.hpp"
#include "simint/simrep.hpp"

namespace simint {

struct EdgeCliqueCover {
  std::vector<std::vector<Vertex>> cliques;
  int size() const { return static_cast<int>(cliques.size()); }
};

struct PathDecomposition {
  std::vector<std::vector<Vertex>> bags;
  int width() const;  // largest bag size minus one; -1 when there are no bags
};

// Empty optional when valid, otherwise a message naming the offending clique or edge.
std::optional<std::string> check_cover(const Graph& g, const EdgeCliqueCover& cover);

// Empty optional when valid, otherwise a message naming the violated axiom.
std::optional<std::string> check_decomposition(const Graph& g, const PathDecomposition& pd);

// Sidecar formats: one clique (or bag) per line, whitespace-separated ids, '#' comments.
EdgeCliqueCover parse_cover(std::istream& in);
PathDecomposition parse_decomposition(std::istream& in);
void write_sets(std::ostream& out, const std::vector<std::vector<Vertex>>& sets);

struct ConstructedRep {
  Graph graph;
  SimRep rep;
};

// Shared interval (0,1); label i marks the endpoints of the i-th edge in g.edges().
SimRep construct_from_edges(const Graph& g);

// Shared interval (0,1); L(v) = { t : v in the t-th clique }.
SimRep construct_from_ecc(const Graph& g, const EdgeCliqueCover& cover);

struct Bipartition {
  std::vector<Vertex> x;
  std::vector<Vertex> y;
};

// Two-colouring by BFS, smallest ids first. Empty optional if g is not bipartite.
std::optional<Bipartition> find_bipartition(const Graph& g);

// d = min(|X|, |Y|). The smaller side shares (0,1) with one label each; the
// other side gets disjoint subintervals labelled by its neighbourhood.
SimRep construct_bipartite(const Graph& g, const Bipartition& sides);

// K_{s,s,s} with d = s^2. Parts are 0..s-1, s..2s-1, 2s..3s-1.
ConstructedRep construct_3partite(int s1, int s2, int s3);

// C_n with d = 2 built from two parallel label strands joined by two
// caps carrying both labels. n = 4 gives the standard four-interval picture.
ConstructedRep construct_cycle(int n);

// d = k(k-1) with k = width + 1.
SimRep construct_from_path_decomposition(const Graph& g, const PathDecomposition& pd);

}  // namespace simint

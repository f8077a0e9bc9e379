#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "simint/graph.hpp"
#include "simint/simrep.hpp"

namespace simint {

// Disjoint Paths: for every arc (s,t) of H find a path t -> s in G, all paths arc-disjoint.
struct DisjointPathsInstance {
  Digraph g;
  Digraph h;
};

// Empty optional when G is acyclic, both digraphs share n and G+H is Eulerian.
std::optional<std::string> check_instance(const DisjointPathsInstance& inst);

// xi(H) = sum over v of max(0, d_H(v) - 1), d_H = in + out degree.
int xi(const Digraph& h);

struct Preprocessed {
  DisjointPathsInstance instance;
  std::vector<int> xi_trace;  // xi before each split and after the last one
};

// Splits vertices until every vertex has H-degree at most one.
Preprocessed preprocess_degree_one(const DisjointPathsInstance& inst);

struct PathPacking {
  bool yes = false;
  std::vector<std::vector<int>> paths;  // per H-arc, the G-arc indices in order
  long long nodes = 0;
};

// Exhaustive backtracking. Throws CapExceeded above max_arcs G-arcs.
PathPacking solve_disjoint_paths(const DisjointPathsInstance& inst, int max_arcs = 12);

struct ColoringGadget {
  Graph graph;
  SimRep rep;
  int k = 0;                  // |E(H)|
  std::vector<Vertex> order;  // topological order of G used for the coordinates
};

// Requires check_instance, xi(H) = 0 and every H-arc pointing backwards in the
// topological order (otherwise no G-path can close it).
ColoringGadget coloring_gadget(const DisjointPathsInstance& inst);

// "n a b", then a G-arc lines "u v", then b H-arc lines "u v"; '#' comments.
DisjointPathsInstance parse_dp_instance(std::istream& in);
void write_dp_instance(std::ostream& out, const DisjointPathsInstance& inst);

// Multicoloured independent set: classes[i][j] is v^{i+1}_{j+1}; edges keep their order.
struct MispInstance {
  Graph g;
  int k = 0;
  int q = 0;
  std::vector<std::vector<Vertex>> classes;
};

std::optional<std::string> check_instance(const MispInstance& inst);

// Index tuple (0-based, one per class) of the lexicographically first solution.
std::optional<std::vector<int>> solve_misp(const MispInstance& inst);
bool is_multicolored_independent(const MispInstance& inst, std::span<const int> tuple);

// HalfStep: S_i tiles ((q-1)/q, m+1) with 2mq+2 intervals of length 1/(2q).
// Literal: length-1/q tiles with step 1/q, overlapping their neighbours.
enum class SSpacing { HalfStep, Literal };

struct IdspGadget {
  Graph graph;
  SimRep rep;
  int k = 0, m = 0, q = 0, target = 0;
  Rational epsilon;
  std::vector<std::vector<std::vector<Vertex>>> w;  // w[i][j][gamma-1]
  std::vector<std::vector<Vertex>> s;               // s[i][gamma]
  std::vector<Vertex> edge;                         // edge[gamma-1]
};

IdspGadget misp_to_idsp_gadget(const MispInstance& inst, SSpacing spacing = SSpacing::HalfStep);

std::vector<Vertex> w_union(const IdspGadget& gadget, std::span<const int> tuple);

// True iff ids contains W^1_{j_1} u ... u W^k_{j_k} for some tuple.
bool check_w_structure(const IdspGadget& gadget, std::span<const Vertex> ids);

// "n m k q", m edge lines "u v", then k class lines with q ids each; '#' comments.
MispInstance parse_misp_instance(std::istream& in);
void write_misp_instance(std::ostream& out, const MispInstance& inst);

}  // namespace simint

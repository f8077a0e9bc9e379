#pragma once

#include <optional>
#include <vector>

#include "simint/constructors.hpp"
#include "simint/graph.hpp"
#include "simint/simrep.hpp"

namespace simint {

struct ParamCaps {
  int ecc_edges = 24;
  int layout_vertices = 7;
  int pathwidth_vertices = 10;
  int lmim_verify_vertices = 12;
};

// Maximal cliques via Bron-Kerbosch with pivoting, sorted lexicographically.
std::vector<std::vector<Vertex>> maximal_cliques(const Graph& g);

struct EccResult {
  int value = 0;
  EdgeCliqueCover cover;
};

EccResult ecc_exact(const Graph& g, const ParamCaps& caps = {});
EdgeCliqueCover ecc_greedy(const Graph& g);

// Unlabelled interval layouts: slot i opens at events[...] in order of opening.
// events[t] = slot index; the first occurrence of a slot opens it, the second closes it.
struct IntervalLayout {
  std::vector<int> events;
  // Interval of each slot on endpoints 1..2n.
  std::vector<Interval> intervals() const;
};

std::vector<IntervalLayout> enumerate_interval_layouts(int n, const ParamCaps& caps = {});

// Interval supergraph F of g that is inclusion-minimal among those whose
// vertices open in `order`: v spans from its position to its last later neighbour.
std::vector<Interval> ordering_layout(const Graph& g, const std::vector<Vertex>& order);

struct SiDecision {
  bool yes = false;
  std::optional<SimRep> witness;
  long long layouts_tried = 0;
};

SiDecision si_decide(const Graph& g, int d, const ParamCaps& caps = {});

struct SiResult {
  int value = 0;
  SimRep witness;
};

SiResult si_exact(const Graph& g, const ParamCaps& caps = {});

struct PathwidthResult {
  int value = 0;
  std::vector<Vertex> order;
  PathDecomposition decomposition;
};

PathwidthResult pathwidth_exact(const Graph& g, const ParamCaps& caps = {});

struct LmimWitness {
  std::vector<Vertex> order;
  std::vector<int> cut_values;  // cut after position i (1-based prefix length i), i = 1..n-1
  int bound = 0;
  bool verified = false;  // cut values computed
  bool certified() const;  // verified and every cut within bound
};

struct LmimResult {
  int value = 0;
  LmimWitness witness;
};

LmimResult linear_mim_exact(const Graph& g, const ParamCaps& caps = {});
int path_alpha_exact(const Graph& g, const ParamCaps& caps = {});

// Induced matching number of the bipartite graph of edges between prefix and rest.
int cut_induced_matching(const Graph& g, const std::vector<Vertex>& prefix);

struct ThinnessWitness {
  std::vector<std::vector<Vertex>> classes;
  std::vector<Vertex> order;
};

ThinnessWitness thinness_witness(const Graph& g, const SimRep& rep);
bool validate_thinness(const Graph& g, const ThinnessWitness& w);

LmimWitness lmim_witness(const Graph& g, const SimRep& rep, const ParamCaps& caps = {});

PathDecomposition path_decomposition_from_rep(const Graph& g, const SimRep& rep);

// Vertices in ascending (right endpoint, id) order.
std::vector<Vertex> right_endpoint_order(const SimRep& rep);

}  // namespace simint

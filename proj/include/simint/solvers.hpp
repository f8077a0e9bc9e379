#pragma once

#include <span>
#include <vector>

#include "simint/graph.hpp"
#include "simint/simrep.hpp"

namespace simint {

// Maximal cliques of the interval graph on `subset`, left to right.
std::vector<std::vector<Vertex>> interval_clique_sweep(const std::vector<Interval>& intervals,
                                                       std::span<const Vertex> subset);

struct CliqueEnumeration {
  std::vector<std::vector<Vertex>> cliques;  // sorted lexicographically
  long long selections = 0;                  // pairwise-intersecting label-set selections swept
};

// Throws std::invalid_argument when rep does not realise g.
CliqueEnumeration enumerate_maximal_cliques(const Graph& g, const SimRep& rep);

// count <= 2^(2^d) * n, evaluated without overflow.
bool within_clique_bound(std::size_t count, int d, int n);

struct WeightedClique {
  Rational weight;
  std::vector<Vertex> clique;
};

WeightedClique max_weight_clique(const Graph& g, const SimRep& rep);

struct SearchResult {
  bool yes = false;
  std::vector<Vertex> witness;  // sorted
  long long nodes = 0;          // calls made
  long long leaves = 0;         // calls that did not branch
};

// Independent set of size exactly k (bounded search over distinct label sets).
SearchResult independent_set_fpt(const Graph& g, const SimRep& rep, int k);

// Dominating set of size at most k.
SearchResult dominating_set_fpt(const Graph& g, const SimRep& rep, int k);

// leaves <= 2^(k*d), evaluated without overflow.
bool within_search_bound(long long leaves, int k, int d);

}  // namespace simint

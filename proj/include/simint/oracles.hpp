#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "simint/graph.hpp"

namespace simint {

enum class Problem {
  MaxIndependentSet,
  MinDominatingSet,
  MinIndependentDominatingSet,
  ChromaticNumber,
  CliqueNumber,
  MaxInducedMatching,
};

const char* problem_name(Problem p);

// Size caps for the exact oracles. `subset` covers the vertex-subset problems
// (independent set, dominating set, independent dominating set, clique number);
// `small` covers chromatic number and induced matching. Every oracle also has a
// hard ceiling of 64 vertices because it works on 64-bit masks.
struct OracleCaps {
  int subset = 16;
  int small = 10;
};

inline constexpr int kMaskCeiling = 64;

struct OracleResult {
  int value = 0;
  std::vector<Vertex> vertices;  // set problems, sorted
  std::vector<Edge> edges;       // induced matching, sorted
  std::vector<int> coloring;     // chromatic number, colors 0..value-1
};

// Exact optimum with the lexicographically smallest optimal witness
// (smallest coloring vector for the chromatic number). Throws CapExceeded.
OracleResult brute_force(Problem p, const Graph& g, const OracleCaps& caps = {});

// All minimum independent dominating sets, each sorted, in lexicographic order.
std::vector<std::vector<Vertex>> all_minimum_independent_dominating_sets(const Graph& g,
                                                                         const OracleCaps& caps = {});

// Maximal cliques by testing every vertex subset. Sorted lexicographically.
std::vector<std::vector<Vertex>> maximal_cliques_bruteforce(const Graph& g,
                                                            const OracleCaps& caps = {});

bool is_dominating(const Graph& g, std::span<const Vertex> vs);
bool is_proper_coloring(const Graph& g, std::span<const int> colors);
bool is_induced_matching(const Graph& g, std::span<const Edge> es);

// Mask helpers shared by the exact searches. Require g.n() <= 64.
std::vector<std::uint64_t> adjacency_masks(const Graph& g);

// Maximum independent set size inside `candidates`, for the graph given by masks.
int max_independent_in(std::span<const std::uint64_t> adj, std::uint64_t candidates);

}  // namespace simint

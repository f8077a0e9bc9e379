#include "simint/oracles.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

#include "simint/errors.hpp"

namespace simint {

using Mask = std::uint64_t;

namespace {

constexpr Mask bit(int v) { return Mask{1} << v; }

Mask full_mask(int n) { return n == 64 ? ~Mask{0} : bit(n) - 1; }

int popcount(Mask m) { return std::popcount(m); }

int lowest(Mask m) { return std::countr_zero(m); }

std::vector<Vertex> mask_to_vector(Mask m) {
  std::vector<Vertex> out;
  for (; m != 0; m &= m - 1) out.push_back(lowest(m));
  return out;
}

void check_cap(Problem p, const Graph& g, const OracleCaps& caps) {
  bool small = p == Problem::ChromaticNumber || p == Problem::MaxInducedMatching;
  int cap = std::min(small ? caps.small : caps.subset, kMaskCeiling);
  if (g.n() > cap) throw CapExceeded(problem_name(p), g.n(), cap);
}

// Clique-cover count of `p`, an upper bound on the independent sets inside it.
int clique_cover_bound(std::span<const Mask> adj, Mask p) {
  int count = 0;
  while (p != 0) {
    int v = lowest(p);
    Mask cand = p & adj[v];
    p &= ~bit(v);
    while (cand != 0) {
      int w = lowest(cand);
      p &= ~bit(w);
      cand &= adj[w];
    }
    ++count;
  }
  return count;
}

// Include-first search over vertices in id order. The first optimum reached is the
// lexicographically smallest one because ties never replace the incumbent.
struct IndependentSearch {
  std::span<const Mask> adj;
  int best = -1;
  Mask best_set = 0;

  void run(Mask p, Mask cur, int size) {
    if (p == 0) {
      if (size > best) {
        best = size;
        best_set = cur;
      }
      return;
    }
    if (size + popcount(p) <= best) return;
    if (size + clique_cover_bound(adj, p) <= best) return;
    int v = lowest(p);
    run(p & ~(adj[v] | bit(v)), cur | bit(v), size + 1);
    run(p & ~bit(v), cur, size);
  }
};

// Minimum (independent) dominating set with forced-in and forced-out vertices.
// Branches on the undominated vertex with the fewest candidate dominators;
// sibling branches exclude the dominators already tried.
struct DominationSearch {
  std::vector<Mask> closed;
  bool independent = false;
  int bound = std::numeric_limits<int>::max();  // only solutions of size < bound count
  int best = std::numeric_limits<int>::max();
  Mask best_set = 0;
  bool collect = false;  // collect every solution of size < bound
  std::vector<Mask> all;

  void run(Mask undom, Mask cand, Mask cur, int size) {
    if (undom == 0) {
      if (collect) {
        all.push_back(cur);
      } else if (size < best) {
        best = size;
        best_set = cur;
        bound = size;
      }
      return;
    }
    if (size + 1 >= bound) return;
    int max_cover = 0;
    for (Mask c = cand; c != 0; c &= c - 1) {
      max_cover = std::max(max_cover, popcount(closed[lowest(c)] & undom));
    }
    if (max_cover == 0) return;
    int need = (popcount(undom) + max_cover - 1) / max_cover;
    if (size + need >= bound) return;

    int pick = -1;
    int pick_options = std::numeric_limits<int>::max();
    for (Mask u = undom; u != 0; u &= u - 1) {
      int v = lowest(u);
      int options = popcount(closed[v] & cand);
      if (options < pick_options) {
        pick_options = options;
        pick = v;
      }
    }
    if (pick_options == 0) return;
    Mask choices = closed[pick] & cand;
    Mask tried = 0;
    for (Mask c = choices; c != 0; c &= c - 1) {
      int w = lowest(c);
      Mask next = cand & ~tried & ~bit(w);
      if (independent) next &= ~closed[w];
      run(undom & ~closed[w], next, cur | bit(w), size + 1);
      tried |= bit(w);
    }
  }
};

std::vector<Mask> closed_masks(const Graph& g) {
  std::vector<Mask> adj = adjacency_masks(g);
  for (int v = 0; v < g.n(); ++v) adj[v] |= bit(v);
  return adj;
}

// Smallest dominating set size respecting the forced sets, or max() when none
// of size < bound exists.
int constrained_domination(const std::vector<Mask>& closed, int n, bool independent, Mask in,
                           Mask out, int bound, Mask* witness = nullptr) {
  Mask dominated = 0;
  for (Mask c = in; c != 0; c &= c - 1) {
    int v = lowest(c);
    if (independent && (closed[v] & in & ~bit(v)) != 0) return std::numeric_limits<int>::max();
    dominated |= closed[v];
  }
  DominationSearch s;
  s.closed = closed;
  s.independent = independent;
  s.bound = bound;
  Mask cand = full_mask(n) & ~out & ~in;
  if (independent) cand &= ~dominated;
  s.run(full_mask(n) & ~dominated, cand, in, popcount(in));
  if (witness != nullptr) *witness = s.best_set;
  return s.best;
}

OracleResult domination(const Graph& g, bool independent) {
  auto closed = closed_masks(g);
  int n = g.n();
  int opt = constrained_domination(closed, n, independent, 0, 0, n + 1);
  // Greedy lexicographic extraction: keep v whenever an optimum still exists with it.
  Mask in = 0, out = 0;
  for (int v = 0; v < n; ++v) {
    Mask dominated = 0;
    for (Mask c = in; c != 0; c &= c - 1) dominated |= closed[lowest(c)];
    if (dominated == full_mask(n)) break;
    if (constrained_domination(closed, n, independent, in | bit(v), out, opt + 1) <= opt) {
      in |= bit(v);
    } else {
      out |= bit(v);
    }
  }
  OracleResult r;
  r.value = opt;
  r.vertices = mask_to_vector(in);
  return r;
}

OracleResult independent_set(std::span<const Mask> adj, int n) {
  IndependentSearch s{adj};
  s.run(full_mask(n), 0, 0);
  OracleResult r;
  r.value = s.best;
  r.vertices = mask_to_vector(s.best_set);
  return r;
}

// DSATUR-ordered backtracking; `color` holds fixed colors (-1 = free).
bool colorable(std::span<const Mask> adj, int n, int k, std::vector<int>& color) {
  int pick = -1, pick_sat = -1, pick_deg = -1, max_used = -1;
  for (int v = 0; v < n; ++v) max_used = std::max(max_used, color[v]);
  for (int v = 0; v < n; ++v) {
    if (color[v] >= 0) continue;
    Mask seen = 0;
    int deg = 0;
    for (Mask c = adj[v]; c != 0; c &= c - 1) {
      int w = lowest(c);
      if (color[w] >= 0) {
        seen |= bit(color[w]);
      } else {
        ++deg;
      }
    }
    int sat = popcount(seen);
    if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
      pick = v;
      pick_sat = sat;
      pick_deg = deg;
    }
  }
  if (pick < 0) return true;
  Mask forbidden = 0;
  for (Mask c = adj[pick]; c != 0; c &= c - 1) {
    int w = lowest(c);
    if (color[w] >= 0) forbidden |= bit(color[w]);
  }
  for (int c = 0; c < k && c <= max_used + 1; ++c) {
    if ((forbidden & bit(c)) != 0) continue;
    color[pick] = c;
    if (colorable(adj, n, k, color)) return true;
  }
  color[pick] = -1;
  return false;
}

OracleResult chromatic(std::span<const Mask> adj, int n) {
  OracleResult r;
  if (n == 0) return r;
  int k = 1;
  for (;; ++k) {
    std::vector<int> color(n, -1);
    if (colorable(adj, n, k, color)) break;
  }
  std::vector<int> color(n, -1);
  for (int v = 0; v < n; ++v) {
    for (int c = 0; c < k; ++c) {
      bool clash = false;
      for (Mask m = adj[v]; m != 0; m &= m - 1) {
        if (color[lowest(m)] == c) clash = true;
      }
      if (clash) continue;
      std::vector<int> trial = color;
      trial[v] = c;
      if (colorable(adj, n, k, trial)) {
        color[v] = c;
        break;
      }
    }
  }
  r.value = k;
  r.coloring = color;
  return r;
}

struct MatchingSearch {
  std::span<const Mask> closed;
  std::vector<Edge> edges;
  int best = -1;
  std::vector<int> best_pick;
  std::vector<int> pick;

  void run(std::size_t idx, Mask blocked, int size, Mask all) {
    if (idx == edges.size()) {
      if (size > best) {
        best = size;
        best_pick = pick;
      }
      return;
    }
    if (size + popcount(all & ~blocked) / 2 <= best) return;
    auto [u, v] = edges[idx];
    if ((blocked & (bit(u) | bit(v))) == 0) {
      pick.push_back(static_cast<int>(idx));
      run(idx + 1, blocked | closed[u] | closed[v], size + 1, all);
      pick.pop_back();
    }
    run(idx + 1, blocked, size, all);
  }
};

OracleResult induced_matching(const Graph& g) {
  auto closed = closed_masks(g);
  MatchingSearch s{closed, g.sorted_edges(), -1, {}, {}};
  s.run(0, 0, 0, full_mask(g.n()));
  OracleResult r;
  r.value = s.best;
  for (int i : s.best_pick) r.edges.push_back(s.edges[i]);
  return r;
}

}  // namespace

const char* problem_name(Problem p) {
  switch (p) {
    case Problem::MaxIndependentSet: return "MAX_INDEPENDENT_SET";
    case Problem::MinDominatingSet: return "MIN_DOMINATING_SET";
    case Problem::MinIndependentDominatingSet: return "MIN_INDEPENDENT_DOMINATING_SET";
    case Problem::ChromaticNumber: return "CHROMATIC_NUMBER";
    case Problem::CliqueNumber: return "CLIQUE_NUMBER";
    case Problem::MaxInducedMatching: return "MAX_INDUCED_MATCHING";
  }
  return "?";
}

std::vector<Mask> adjacency_masks(const Graph& g) {
  if (g.n() > kMaskCeiling) throw CapExceeded("adjacency masks", g.n(), kMaskCeiling);
  std::vector<Mask> adj(g.n(), 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= bit(v);
    adj[v] |= bit(u);
  }
  return adj;
}

int max_independent_in(std::span<const Mask> adj, Mask candidates) {
  IndependentSearch s{adj};
  s.run(candidates, 0, 0);
  return std::max(s.best, 0);
}

OracleResult brute_force(Problem p, const Graph& g, const OracleCaps& caps) {
  check_cap(p, g, caps);
  switch (p) {
    case Problem::MaxIndependentSet: {
      auto adj = adjacency_masks(g);
      return independent_set(adj, g.n());
    }
    case Problem::CliqueNumber: {
      auto adj = adjacency_masks(g);
      for (int v = 0; v < g.n(); ++v) adj[v] = full_mask(g.n()) & ~adj[v] & ~bit(v);
      return independent_set(adj, g.n());
    }
    case Problem::MinDominatingSet:
      return domination(g, false);
    case Problem::MinIndependentDominatingSet:
      return domination(g, true);
    case Problem::ChromaticNumber: {
      auto adj = adjacency_masks(g);
      return chromatic(adj, g.n());
    }
    case Problem::MaxInducedMatching:
      return induced_matching(g);
  }
  throw std::invalid_argument("unknown problem");
}

std::vector<std::vector<Vertex>> all_minimum_independent_dominating_sets(const Graph& g,
                                                                         const OracleCaps& caps) {
  check_cap(Problem::MinIndependentDominatingSet, g, caps);
  auto closed = closed_masks(g);
  int n = g.n();
  int opt = constrained_domination(closed, n, true, 0, 0, n + 1);
  DominationSearch s;
  s.closed = closed;
  s.independent = true;
  s.bound = opt + 1;
  s.collect = true;
  s.run(full_mask(n), full_mask(n), 0, 0);
  std::vector<std::vector<Vertex>> out;
  for (Mask m : s.all) {
    if (popcount(m) == opt) out.push_back(mask_to_vector(m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Vertex>> maximal_cliques_bruteforce(const Graph& g, const OracleCaps& caps) {
  int cap = std::min(caps.subset, 30);
  if (g.n() > cap) throw CapExceeded("maximal cliques", g.n(), cap);
  auto adj = adjacency_masks(g);
  int n = g.n();
  std::vector<std::vector<Vertex>> out;
  if (n == 0) return out;
  for (Mask s = 1; s <= full_mask(n); ++s) {
    Mask common = full_mask(n);
    bool clique = true;
    for (Mask c = s; c != 0; c &= c - 1) {
      int v = lowest(c);
      if ((s & ~bit(v) & ~adj[v]) != 0) {
        clique = false;
        break;
      }
      common &= adj[v];
    }
    if (clique && (common & ~s) == 0) out.push_back(mask_to_vector(s));
    if (s == full_mask(n)) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_dominating(const Graph& g, std::span<const Vertex> vs) {
  VertexSet dom(g.n());
  for (Vertex v : vs) dom |= g.closed_neighbors(v);
  return dom.all();
}

bool is_proper_coloring(const Graph& g, std::span<const int> colors) {
  if (static_cast<int>(colors.size()) != g.n()) return false;
  for (auto [u, v] : g.edges()) {
    if (colors[u] == colors[v]) return false;
  }
  return true;
}

bool is_induced_matching(const Graph& g, std::span<const Edge> es) {
  std::vector<Vertex> ends;
  for (auto [u, v] : es) {
    if (!g.adjacent(u, v)) return false;
    ends.push_back(u);
    ends.push_back(v);
  }
  std::vector<Vertex> sorted = ends;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      for (Vertex a : {es[i].first, es[i].second}) {
        for (Vertex b : {es[j].first, es[j].second}) {
          if (g.adjacent(a, b)) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace simint

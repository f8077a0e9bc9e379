#pragma once

// Slow reference implementations used only by the tests. Each works on
// adjacency bitmasks and shares no code with the library algorithms it checks.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "simint/graph.hpp"
#include "simint/simrep.hpp"

namespace testing_oracle {

using simint::Graph;
using Mask = std::uint32_t;

inline std::vector<Mask> adjacency(const Graph& g) {
  std::vector<Mask> adj(g.n(), 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
  }
  return adj;
}

inline bool independent(const std::vector<Mask>& adj, Mask s) {
  for (int v = 0; v < static_cast<int>(adj.size()); ++v) {
    if ((s >> v & 1) && (adj[v] & s)) return false;
  }
  return true;
}

inline bool clique(const std::vector<Mask>& adj, Mask s) {
  for (int v = 0; v < static_cast<int>(adj.size()); ++v) {
    if ((s >> v & 1) && (s & ~(adj[v] | Mask{1} << v))) return false;
  }
  return true;
}

inline bool dominating(const std::vector<Mask>& adj, Mask s) {
  int n = static_cast<int>(adj.size());
  Mask covered = s;
  for (int v = 0; v < n; ++v) {
    if (s >> v & 1) covered |= adj[v];
  }
  return covered == (n == 32 ? ~Mask{0} : (Mask{1} << n) - 1);
}

inline int alpha(const Graph& g) {
  auto adj = adjacency(g);
  int best = 0;
  for (Mask s = 0; s < (Mask{1} << g.n()); ++s) {
    if (independent(adj, s)) best = std::max(best, std::popcount(s));
  }
  return best;
}

inline int gamma(const Graph& g) {
  auto adj = adjacency(g);
  int best = g.n();
  for (Mask s = 0; s < (Mask{1} << g.n()); ++s) {
    if (dominating(adj, s)) best = std::min(best, std::popcount(s));
  }
  return best;
}

inline int independent_domination(const Graph& g) {
  auto adj = adjacency(g);
  int best = g.n() + 1;
  for (Mask s = 0; s < (Mask{1} << g.n()); ++s) {
    if (independent(adj, s) && dominating(adj, s)) best = std::min(best, std::popcount(s));
  }
  return best;
}

inline std::set<std::vector<int>> maximal_cliques(const Graph& g) {
  auto adj = adjacency(g);
  std::set<std::vector<int>> out;
  int n = g.n();
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    if (!clique(adj, s)) continue;
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v) {
      if (!(s >> v & 1) && clique(adj, s | Mask{1} << v)) maximal = false;
    }
    if (!maximal) continue;
    std::vector<int> c;
    for (int v = 0; v < n; ++v) {
      if (s >> v & 1) c.push_back(v);
    }
    out.insert(c);
  }
  return out;
}

// Minimum number of cliques covering every edge, by growing the cover size.
inline int ecc(const Graph& g) {
  if (g.m() == 0) return 0;
  auto adj = adjacency(g);
  int n = g.n();
  std::vector<std::uint64_t> covers;  // edge masks of cliques with >= 2 vertices
  const auto& edges = g.edges();
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    if (std::popcount(s) < 2 || !clique(adj, s)) continue;
    std::uint64_t em = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if ((s >> edges[i].first & 1) && (s >> edges[i].second & 1)) em |= std::uint64_t{1} << i;
    }
    covers.push_back(em);
  }
  std::uint64_t all = edges.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << edges.size()) - 1;
  std::set<std::uint64_t> layer{0};
  for (int k = 1;; ++k) {
    std::set<std::uint64_t> next;
    for (auto have : layer) {
      for (auto c : covers) next.insert(have | c);
    }
    if (next.count(all)) return k;
    layer = std::move(next);
  }
}

// Pathwidth as the vertex separation number minimised over all orders.
inline int pathwidth(const Graph& g) {
  int n = g.n();
  if (n == 0) return -1;
  auto adj = adjacency(g);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  int best = n;
  do {
    int worst = 0;
    Mask prefix = 0;
    for (int i = 0; i < n; ++i) {
      prefix |= Mask{1} << order[i];
      int boundary = 0;
      for (int v = 0; v < n; ++v) {
        if ((prefix >> v & 1) && (adj[v] & ~prefix)) ++boundary;
      }
      worst = std::max(worst, boundary);
    }
    best = std::min(best, worst);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

// Largest induced matching of the bipartite graph formed by the edges between
// prefix and the rest; edges inside either side are ignored.
inline int cut_mim(const Graph& g, Mask prefix) {
  std::vector<simint::Edge> cross;
  for (auto [u, v] : g.edges()) {
    if (((prefix >> u) & 1) != ((prefix >> v) & 1)) cross.push_back({u, v});
  }
  int best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << cross.size()); ++s) {
    Mask touched = 0;
    bool ok = true;
    for (std::size_t i = 0; i < cross.size() && ok; ++i) {
      if (!(s >> i & 1)) continue;
      Mask ends = Mask{1} << cross[i].first | Mask{1} << cross[i].second;
      if (touched & ends) ok = false;
      touched |= ends;
    }
    if (!ok) continue;
    // Induced: the only cut edges inside the touched set are the chosen ones.
    int inside = 0;
    for (auto [u, v] : cross) {
      if ((touched >> u & 1) && (touched >> v & 1)) ++inside;
    }
    if (inside == std::popcount(s)) best = std::max(best, inside);
  }
  return best;
}

inline int linear_mim(const Graph& g) {
  int n = g.n();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  int best = n;
  do {
    int worst = 0;
    Mask prefix = 0;
    for (int i = 0; i + 1 < n; ++i) {
      prefix |= Mask{1} << order[i];
      worst = std::max(worst, cut_mim(g, prefix));
    }
    best = std::min(best, worst);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

// Every interval graph on n labelled vertices, as adjacency masks, by walking
// all sequences of 2n endpoint events (each vertex opens before it closes).
inline std::vector<std::vector<Mask>> interval_graphs(int n) {
  std::set<std::vector<Mask>> seen;
  std::vector<int> state(n, 0);  // 0 unopened, 1 open, 2 closed
  std::vector<Mask> adj(n, 0);
  auto walk = [&](auto&& self, int events) -> void {
    if (events == 2 * n) {
      seen.insert(adj);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (state[v] == 0) {
        // Opening v: it meets every currently open interval.
        auto saved = adj;
        for (int u = 0; u < n; ++u) {
          if (state[u] == 1) {
            adj[u] |= Mask{1} << v;
            adj[v] |= Mask{1} << u;
          }
        }
        state[v] = 1;
        self(self, events + 1);
        state[v] = 0;
        adj = std::move(saved);
      } else if (state[v] == 1) {
        state[v] = 2;
        self(self, events + 1);
        state[v] = 1;
      }
    }
  };
  walk(walk, 0);
  return {seen.begin(), seen.end()};
}

// Smallest adjacency encoding over all vertex relabellings.
inline std::vector<Mask> canonical_form(const std::vector<Mask>& adj) {
  int n = static_cast<int>(adj.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Mask> best;
  do {
    std::vector<Mask> image(n, 0);
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (adj[u] >> v & 1) image[perm[u]] |= Mask{1} << perm[v];
      }
    }
    if (best.empty() || image < best) best = std::move(image);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Smallest d <= max_d admitting interval supergraph F and label sets in
// {1..d} with E(g) = E(F) restricted to pairs sharing a label; nullopt above max_d.
inline std::optional<int> si(const Graph& g, int max_d) {
  int n = g.n();
  auto target = adjacency(g);
  if (g.m() == 0) return 0;
  auto layouts = interval_graphs(n);
  for (int d = 1; d <= max_d; ++d) {
    for (const auto& f : layouts) {
      bool super = true;
      for (int v = 0; v < n && super; ++v) super = (target[v] & ~f[v]) == 0;
      if (!super) continue;
      std::vector<Mask> labels(n, 0);
      auto assign = [&](auto&& self, int v) -> bool {
        if (v == n) return true;
        for (Mask l = 0; l < (Mask{1} << d); ++l) {
          bool ok = true;
          for (int u = 0; u < v && ok; ++u) {
            bool edge = (f[v] >> u & 1) && (labels[u] & l);
            ok = edge == static_cast<bool>(target[v] >> u & 1);
          }
          if (!ok) continue;
          labels[v] = l;
          if (self(self, v + 1)) return true;
        }
        return false;
      };
      if (assign(assign, 0)) return d;
    }
  }
  return std::nullopt;
}

// Pairwise check of a representation against a graph, written independently
// of verify_representation.
inline bool represents(const Graph& g, const simint::SimRep& rep) {
  if (rep.n() != g.n()) return false;
  for (int u = 0; u < g.n(); ++u) {
    for (int v = u + 1; v < g.n(); ++v) {
      const auto& a = rep.interval(u);
      const auto& b = rep.interval(v);
      bool overlap = std::max(a.l, b.l) < std::min(a.r, b.r);
      bool share = false;
      for (int l : rep.labels(u).to_vector()) share = share || rep.labels(v).contains(l);
      if ((overlap && share) != g.adjacent(u, v)) return false;
    }
  }
  return true;
}

}  // namespace testing_oracle

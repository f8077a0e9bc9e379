#include "simint/params.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "simint/errors.hpp"
#include "simint/oracles.hpp"
#include "simint/solvers.hpp"

namespace simint {

using Mask = std::uint64_t;

namespace {

constexpr Mask bit(int i) { return Mask{1} << i; }

int lowest(Mask m) { return std::countr_zero(m); }

void require_valid(const Graph& g, const SimRep& rep) {
  VerifyResult v = verify_representation(g, rep);
  if (!v.valid) {
    throw std::invalid_argument("representation does not realise the graph: " +
                                std::string(to_string(v.violation->kind)) + " edge {" +
                                std::to_string(v.violation->u) + "," + std::to_string(v.violation->v) + "}");
  }
}

void bron_kerbosch(const Graph& g, std::vector<Vertex>& r, VertexSet p, VertexSet x,
                   std::vector<std::vector<Vertex>>& out) {
  if (p.none() && x.none()) {
    std::vector<Vertex> c = r;
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
    return;
  }
  VertexSet px = p | x;
  Vertex pivot = -1;
  std::size_t best = 0;
  for (auto u = px.find_first(); u != VertexSet::npos; u = px.find_next(u)) {
    std::size_t c = (p & g.neighbors(static_cast<Vertex>(u))).count();
    if (pivot < 0 || c > best) {
      pivot = static_cast<Vertex>(u);
      best = c;
    }
  }
  VertexSet todo = p - g.neighbors(pivot);
  for (auto v = todo.find_first(); v != VertexSet::npos; v = todo.find_next(v)) {
    const VertexSet& nv = g.neighbors(static_cast<Vertex>(v));
    r.push_back(static_cast<Vertex>(v));
    bron_kerbosch(g, r, p & nv, x & nv, out);
    r.pop_back();
    p.reset(v);
    x.set(v);
  }
}

// Finds a smallest set of candidate cliques (given as edge masks) covering
// `target`, using fewer than `bound` cliques. With stop_at_first the first
// cover found under the bound is returned instead of a minimum one.
class CoverSearch {
 public:
  CoverSearch(std::vector<Mask> cliques, int edges) : cliques_(std::move(cliques)), owners_(edges), together_(edges, 0) {
    for (int c = 0; c < static_cast<int>(cliques_.size()); ++c) {
      for (Mask m = cliques_[c]; m != 0; m &= m - 1) {
        owners_[lowest(m)].push_back(c);
        together_[lowest(m)] |= cliques_[c];
      }
    }
  }

  std::optional<std::vector<int>> run(Mask target, int bound, bool stop_at_first) {
    bound_ = bound;
    stop_ = stop_at_first;
    found_.reset();
    std::vector<int> pick;
    search(target, pick);
    return found_;
  }

 private:
  // Edges no two of which fit in one clique; each needs its own clique.
  int lower_bound(Mask uncovered) const {
    int count = 0;
    Mask blocked = 0;
    for (Mask m = uncovered; m != 0; m &= m - 1) {
      int e = lowest(m);
      if ((blocked & bit(e)) != 0) continue;
      ++count;
      blocked |= together_[e];
    }
    return count;
  }

  void search(Mask uncovered, std::vector<int>& pick) {
    if (uncovered == 0) {
      found_ = pick;
      bound_ = static_cast<int>(pick.size());
      return;
    }
    if (static_cast<int>(pick.size()) + lower_bound(uncovered) >= bound_) return;
    int edge = -1;
    std::size_t options = std::numeric_limits<std::size_t>::max();
    for (Mask m = uncovered; m != 0; m &= m - 1) {
      int e = lowest(m);
      if (owners_[e].size() < options) {
        options = owners_[e].size();
        edge = e;
      }
    }
    std::vector<int> order = owners_[edge];
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return std::popcount(cliques_[a] & uncovered) > std::popcount(cliques_[b] & uncovered);
    });
    for (int c : order) {
      pick.push_back(c);
      search(uncovered & ~cliques_[c], pick);
      pick.pop_back();
      if (stop_ && found_) return;
    }
  }

  std::vector<Mask> cliques_;
  std::vector<std::vector<int>> owners_;
  std::vector<Mask> together_;
  int bound_ = 0;
  bool stop_ = false;
  std::optional<std::vector<int>> found_;
};

// Index of the unordered pair {u, v} among n vertices.
int pair_index(int u, int v, int n) {
  if (u > v) std::swap(u, v);
  return u * n - u * (u + 1) / 2 + (v - u - 1);
}

Mask pair_mask_of(const Graph& g) {
  Mask m = 0;
  for (auto [u, v] : g.edges()) m |= bit(pair_index(u, v, g.n()));
  return m;
}

Mask interval_pairs(const std::vector<Interval>& iv) {
  int n = static_cast<int>(iv.size());
  Mask m = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (intervals_intersect(iv[u], iv[v])) m |= bit(pair_index(u, v, n));
    }
  }
  return m;
}

void check_layout_cap(const char* op, const Graph& g, const ParamCaps& caps) {
  int cap = std::min(caps.layout_vertices, 11);
  if (g.n() > cap) throw CapExceeded(op, g.n(), cap);
}

// Every distinct minimal ordering layout, in order of first appearance over
// permutations in lexicographic order.
template <typename Visit>
void for_each_ordering_layout(const Graph& g, Visit visit) {
  std::vector<Vertex> order(g.n());
  std::iota(order.begin(), order.end(), 0);
  std::unordered_set<Mask> seen;
  do {
    auto iv = ordering_layout(g, order);
    Mask f = interval_pairs(iv);
    if (!seen.insert(f).second) continue;
    if (!visit(iv, f)) return;
  } while (std::next_permutation(order.begin(), order.end()));
}

std::vector<int> subset_alpha(const Graph& g) {
  auto adj = adjacency_masks(g);
  int n = g.n();
  std::vector<int> alpha(std::size_t{1} << n, 0);
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    int v = lowest(s);
    alpha[s] = std::max(alpha[s & ~bit(v)], 1 + alpha[s & ~bit(v) & ~adj[v]]);
  }
  return alpha;
}

Mask to_mask(const std::vector<Vertex>& vs) {
  Mask m = 0;
  for (Vertex v : vs) m |= bit(v);
  return m;
}

}  // namespace

std::vector<std::vector<Vertex>> maximal_cliques(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  if (g.n() == 0) return out;
  std::vector<Vertex> r;
  bron_kerbosch(g, r, full_set(g.n()), empty_set(g.n()), out);
  std::sort(out.begin(), out.end());
  return out;
}

EccResult ecc_exact(const Graph& g, const ParamCaps& caps) {
  int cap = std::min(caps.ecc_edges, 64);
  if (g.m() > cap) throw CapExceeded("ecc_exact", g.m(), cap);
  EdgeCliqueCover greedy = ecc_greedy(g);
  if (g.m() == 0) return {0, {}};

  auto edges = g.sorted_edges();
  auto edge_index = [&](Vertex u, Vertex v) {
    return static_cast<int>(std::lower_bound(edges.begin(), edges.end(), make_edge(u, v)) - edges.begin());
  };
  std::vector<std::vector<Vertex>> cliques;
  std::vector<Mask> masks;
  for (auto& c : maximal_cliques(g)) {
    if (c.size() < 2) continue;
    Mask m = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = i + 1; j < c.size(); ++j) m |= bit(edge_index(c[i], c[j]));
    }
    cliques.push_back(std::move(c));
    masks.push_back(m);
  }
  CoverSearch search(masks, g.m());
  Mask all = g.m() == 64 ? ~Mask{0} : bit(g.m()) - 1;
  auto better = search.run(all, greedy.size(), false);
  if (!better) {
    std::sort(greedy.cliques.begin(), greedy.cliques.end());
    return {greedy.size(), greedy};
  }
  EccResult r;
  for (int c : *better) r.cover.cliques.push_back(cliques[c]);
  std::sort(r.cover.cliques.begin(), r.cover.cliques.end());
  r.value = r.cover.size();
  return r;
}

EdgeCliqueCover ecc_greedy(const Graph& g) {
  EdgeCliqueCover cover;
  std::vector<std::vector<Vertex>> cliques;
  for (auto& c : maximal_cliques(g)) {
    if (c.size() >= 2) cliques.push_back(std::move(c));
  }
  std::vector<VertexSet> uncovered(g.n(), VertexSet(g.n()));
  int left = g.m();
  for (auto [u, v] : g.edges()) {
    uncovered[u].set(v);
    uncovered[v].set(u);
  }
  while (left > 0) {
    std::size_t best = 0;
    int pick = -1;
    for (int c = 0; c < static_cast<int>(cliques.size()); ++c) {
      VertexSet members = from_vector(g.n(), cliques[c]);
      std::size_t gain = 0;
      for (Vertex v : cliques[c]) gain += (uncovered[v] & members).count();
      if (gain > best) {
        best = gain;
        pick = c;
      }
    }
    const auto& c = cliques[pick];
    for (Vertex u : c) {
      for (Vertex v : c) {
        if (u < v && uncovered[u][v]) {
          uncovered[u].reset(v);
          uncovered[v].reset(u);
          --left;
        }
      }
    }
    cover.cliques.push_back(c);
  }
  return cover;
}

std::vector<Interval> IntervalLayout::intervals() const {
  int n = static_cast<int>(events.size()) / 2;
  std::vector<Interval> iv(n);
  std::vector<bool> opened(n, false);
  for (std::size_t t = 0; t < events.size(); ++t) {
    int s = events[t];
    auto pos = static_cast<std::int64_t>(t + 1);
    if (!opened[s]) {
      iv[s].l = pos;
      opened[s] = true;
    } else {
      iv[s].r = pos;
    }
  }
  return iv;
}

std::vector<IntervalLayout> enumerate_interval_layouts(int n, const ParamCaps& caps) {
  if (n < 0) throw std::invalid_argument("negative layout size");
  if (n > caps.layout_vertices) throw CapExceeded("enumerate_interval_layouts", n, caps.layout_vertices);
  std::vector<IntervalLayout> out;
  std::vector<int> events;
  std::vector<int> open;
  auto step = [&](auto&& self, int opened) -> void {
    if (static_cast<int>(events.size()) == 2 * n) {
      out.push_back({events});
      return;
    }
    if (opened < n) {
      events.push_back(opened);
      open.push_back(opened);
      self(self, opened + 1);
      open.pop_back();
      events.pop_back();
    }
    for (std::size_t i = 0; i < open.size(); ++i) {
      int s = open[i];
      events.push_back(s);
      open.erase(open.begin() + static_cast<std::ptrdiff_t>(i));
      self(self, opened);
      open.insert(open.begin() + static_cast<std::ptrdiff_t>(i), s);
      events.pop_back();
    }
  };
  step(step, 0);
  return out;
}

std::vector<Interval> ordering_layout(const Graph& g, const std::vector<Vertex>& order) {
  int n = g.n();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i + 1;
  std::vector<Interval> iv(n);
  for (Vertex v = 0; v < n; ++v) {
    int last = pos[v];
    for (Vertex w : to_vector(g.neighbors(v))) last = std::max(last, pos[w]);
    iv[v] = {Rational(pos[v]), Rational(2 * last + 1, 2)};
  }
  return iv;
}

SiDecision si_decide(const Graph& g, int d, const ParamCaps& caps) {
  check_layout_cap("si_decide", g, caps);
  if (d < 0) throw std::invalid_argument("negative label budget");
  if (d > kMaxLabels) throw std::invalid_argument("label budget above 128");
  int n = g.n();
  SiDecision out;
  std::vector<Vertex> identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  if (g.m() == 0) {
    out.yes = true;
    out.witness = SimRep(d, ordering_layout(g, identity), std::vector<LabelSet>(n));
    out.layouts_tried = 1;
    return out;
  }
  if (d == 0) return out;

  auto edges = g.sorted_edges();
  Mask gpairs = pair_mask_of(g);
  std::vector<Mask> failed;
  for_each_ordering_layout(g, [&](const std::vector<Interval>& iv, Mask f) {
    // A larger F only adds forbidden pairs, so supersets of a failure fail too.
    for (Mask bad : failed) {
      if ((bad & ~f) == 0) return true;
    }
    ++out.layouts_tried;
    Mask forbidden = f & ~gpairs;
    Graph allowed(n);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if ((forbidden & bit(pair_index(u, v, n))) == 0) allowed.add_edge(u, v);
      }
    }
    std::vector<std::vector<Vertex>> cliques;
    std::vector<Mask> masks;
    for (auto& c : maximal_cliques(allowed)) {
      Mask m = 0;
      for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        if (std::binary_search(c.begin(), c.end(), edges[e].first) &&
            std::binary_search(c.begin(), c.end(), edges[e].second)) {
          m |= bit(e);
        }
      }
      if (m == 0) continue;
      cliques.push_back(std::move(c));
      masks.push_back(m);
    }
    CoverSearch search(masks, static_cast<int>(edges.size()));
    auto cover = search.run(bit(static_cast<int>(edges.size())) - 1, d + 1, true);
    if (!cover) {
      failed.push_back(f);
      return true;
    }
    std::vector<LabelSet> labels(n);
    for (std::size_t t = 0; t < cover->size(); ++t) {
      for (Vertex v : cliques[(*cover)[t]]) labels[v].insert(static_cast<int>(t) + 1);
    }
    out.yes = true;
    out.witness = SimRep(d, iv, std::move(labels));
    return false;
  });
  if (out.yes && !verify_representation(g, *out.witness).valid) {
    throw std::logic_error("si_decide produced an invalid witness");
  }
  return out;
}

SiResult si_exact(const Graph& g, const ParamCaps& caps) {
  check_layout_cap("si_exact", g, caps);
  for (int d = 0;; ++d) {
    SiDecision r = si_decide(g, d, caps);
    if (r.yes) return {d, *r.witness};
  }
}

PathwidthResult pathwidth_exact(const Graph& g, const ParamCaps& caps) {
  int cap = std::min(caps.pathwidth_vertices, 24);
  if (g.n() > cap) throw CapExceeded("pathwidth_exact", g.n(), cap);
  int n = g.n();
  PathwidthResult out;
  if (n == 0) {
    out.value = -1;
    return out;
  }
  auto adj = adjacency_masks(g);
  std::size_t states = std::size_t{1} << n;
  // boundary[S]: vertices of S with a neighbour outside S.
  std::vector<int> boundary(states, 0), best(states, 0);
  for (Mask s = 1; s < states; ++s) {
    int c = 0;
    for (Mask m = s; m != 0; m &= m - 1) {
      if ((adj[lowest(m)] & ~s) != 0) ++c;
    }
    boundary[s] = c;
    int inner = std::numeric_limits<int>::max();
    for (Mask m = s; m != 0; m &= m - 1) inner = std::min(inner, best[s & ~bit(lowest(m))]);
    best[s] = std::max(c, inner);
  }
  Mask s = states - 1;
  std::vector<Vertex> reversed;
  while (s != 0) {
    int pick = -1;
    for (Mask m = s; m != 0; m &= m - 1) {
      int v = lowest(m);
      if (pick < 0 || best[s & ~bit(v)] < best[s & ~bit(pick)]) pick = v;
    }
    reversed.push_back(pick);
    s &= ~bit(pick);
  }
  out.order.assign(reversed.rbegin(), reversed.rend());
  Mask prefix = 0;
  for (Vertex v : out.order) {
    std::vector<Vertex> bag{v};
    for (Mask m = prefix; m != 0; m &= m - 1) {
      int u = lowest(m);
      if ((adj[u] & ~prefix) != 0) bag.push_back(u);
    }
    std::sort(bag.begin(), bag.end());
    out.decomposition.bags.push_back(std::move(bag));
    prefix |= bit(v);
  }
  out.value = out.decomposition.width();
  if (out.value != best[states - 1]) throw std::logic_error("pathwidth witness width mismatch");
  return out;
}

int cut_induced_matching(const Graph& g, const std::vector<Vertex>& prefix) {
  VertexSet left = from_vector(g.n(), prefix);
  Graph cut(g.n());
  for (auto [u, v] : g.edges()) {
    if (left[u] != left[v]) cut.add_edge(u, v);
  }
  OracleCaps caps;
  caps.small = kMaskCeiling;
  return brute_force(Problem::MaxInducedMatching, cut, caps).value;
}

bool LmimWitness::certified() const {
  return verified && std::all_of(cut_values.begin(), cut_values.end(), [&](int c) { return c <= bound; });
}

LmimResult linear_mim_exact(const Graph& g, const ParamCaps& caps) {
  check_layout_cap("linear_mim_exact", g, caps);
  int n = g.n();
  std::size_t states = std::size_t{1} << n;
  std::vector<int> cut(states, 0), best(states, 0);
  for (Mask s = 1; s < states; ++s) {
    std::vector<Vertex> prefix;
    for (Mask m = s; m != 0; m &= m - 1) prefix.push_back(lowest(m));
    cut[s] = cut_induced_matching(g, prefix);
    int inner = std::numeric_limits<int>::max();
    for (Mask m = s; m != 0; m &= m - 1) inner = std::min(inner, best[s & ~bit(lowest(m))]);
    best[s] = std::max(cut[s], inner);
  }
  LmimResult out;
  out.value = best[states - 1];
  Mask s = states - 1;
  std::vector<Vertex> reversed;
  while (s != 0) {
    int pick = -1;
    for (Mask m = s; m != 0; m &= m - 1) {
      int v = lowest(m);
      if (pick < 0 || best[s & ~bit(v)] < best[s & ~bit(pick)]) pick = v;
    }
    reversed.push_back(pick);
    s &= ~bit(pick);
  }
  out.witness.order.assign(reversed.rbegin(), reversed.rend());
  Mask prefix = 0;
  for (int i = 0; i + 1 < n; ++i) {
    prefix |= bit(out.witness.order[i]);
    out.witness.cut_values.push_back(cut[prefix]);
  }
  out.witness.bound = out.value;
  out.witness.verified = true;
  return out;
}

int path_alpha_exact(const Graph& g, const ParamCaps& caps) {
  check_layout_cap("path_alpha_exact", g, caps);
  if (g.n() == 0) return 0;
  auto alpha = subset_alpha(g);
  int best = std::numeric_limits<int>::max();
  std::vector<Vertex> all(g.n());
  std::iota(all.begin(), all.end(), 0);
  for_each_ordering_layout(g, [&](const std::vector<Interval>& iv, Mask) {
    int worst = 0;
    for (const auto& bag : interval_clique_sweep(iv, all)) worst = std::max(worst, alpha[to_mask(bag)]);
    best = std::min(best, worst);
    return best > 1;
  });
  return best;
}

std::vector<Vertex> right_endpoint_order(const SimRep& rep) {
  std::vector<Vertex> order(rep.n());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return rep.interval(a).r < rep.interval(b).r; });
  return order;
}

ThinnessWitness thinness_witness(const Graph& g, const SimRep& rep) {
  require_valid(g, rep);
  ThinnessWitness w;
  w.order = right_endpoint_order(rep);
  for (const LabelSet& s : distinct_label_sets(rep)) {
    std::vector<Vertex> cls;
    for (Vertex v = 0; v < g.n(); ++v) {
      if (rep.labels(v) == s) cls.push_back(v);
    }
    w.classes.push_back(std::move(cls));
  }
  return w;
}

bool validate_thinness(const Graph& g, const ThinnessWitness& w) {
  int n = g.n();
  if (static_cast<int>(w.order.size()) != n) return false;
  std::vector<int> cls(n, -1), seen(n, 0);
  for (std::size_t c = 0; c < w.classes.size(); ++c) {
    for (Vertex v : w.classes[c]) {
      if (v < 0 || v >= n || cls[v] >= 0) return false;
      cls[v] = static_cast<int>(c);
    }
  }
  for (Vertex v : w.order) {
    if (v < 0 || v >= n || seen[v]++) return false;
  }
  if (std::find(cls.begin(), cls.end(), -1) != cls.end()) return false;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      Vertex va = w.order[a], vb = w.order[b];
      if (cls[va] != cls[vb]) continue;
      for (int c = b + 1; c < n; ++c) {
        Vertex vc = w.order[c];
        if (g.adjacent(va, vc) && !g.adjacent(vb, vc)) return false;
      }
    }
  }
  return true;
}

LmimWitness lmim_witness(const Graph& g, const SimRep& rep, const ParamCaps& caps) {
  require_valid(g, rep);
  LmimWitness w;
  w.order = right_endpoint_order(rep);
  w.bound = rep.d();
  if (g.n() > caps.lmim_verify_vertices) return w;
  std::vector<Vertex> prefix;
  for (int i = 0; i + 1 < g.n(); ++i) {
    prefix.push_back(w.order[i]);
    w.cut_values.push_back(cut_induced_matching(g, prefix));
  }
  w.verified = true;
  return w;
}

PathDecomposition path_decomposition_from_rep(const Graph& g, const SimRep& rep) {
  require_valid(g, rep);
  std::vector<Vertex> all(g.n());
  std::iota(all.begin(), all.end(), 0);
  return {interval_clique_sweep(rep.intervals(), all)};
}

}  // namespace simint

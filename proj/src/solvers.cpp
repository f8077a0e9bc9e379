#include "simint/solvers.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace simint {

namespace {

void require_valid(const Graph& g, const SimRep& rep) {
  VerifyResult v = verify_representation(g, rep);
  if (!v.valid) {
    throw std::invalid_argument("representation does not realise the graph: " +
                                std::string(to_string(v.violation->kind)) + " edge {" +
                                std::to_string(v.violation->u) + "," + std::to_string(v.violation->v) + "}");
  }
}

bool is_maximal_clique(const Graph& g, const std::vector<Vertex>& clique) {
  VertexSet common = full_set(g.n());
  for (Vertex v : clique) common &= g.neighbors(v);
  return common.none();
}

}  // namespace

std::vector<std::vector<Vertex>> interval_clique_sweep(const std::vector<Interval>& intervals,
                                                       std::span<const Vertex> subset) {
  // (coordinate, kind, vertex); kind 0 closes and sorts before kind 1 opening,
  // since touching open intervals are disjoint.
  std::vector<std::tuple<Rational, int, Vertex>> events;
  for (Vertex v : subset) {
    events.emplace_back(intervals[v].l, 1, v);
    events.emplace_back(intervals[v].r, 0, v);
  }
  std::sort(events.begin(), events.end());
  std::vector<std::vector<Vertex>> out;
  std::set<Vertex> active;
  bool grown = false;
  for (const auto& [x, kind, v] : events) {
    if (kind == 1) {
      active.insert(v);
      grown = true;
    } else {
      if (grown) out.emplace_back(active.begin(), active.end());
      grown = false;
      active.erase(v);
    }
  }
  return out;
}

CliqueEnumeration enumerate_maximal_cliques(const Graph& g, const SimRep& rep) {
  require_valid(g, rep);
  std::set<std::vector<Vertex>> found;
  std::map<LabelSet, std::vector<Vertex>> by_label;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (rep.labels(v).empty()) {
      found.insert({v});
    } else {
      by_label[rep.labels(v)].push_back(v);
    }
  }
  std::vector<LabelSet> sets;
  std::vector<const std::vector<Vertex>*> members;
  for (const auto& [s, vs] : by_label) {
    sets.push_back(s);
    members.push_back(&vs);
  }

  CliqueEnumeration result;
  std::vector<int> chosen;
  auto sweep = [&] {
    std::vector<Vertex> subset;
    for (int i : chosen) subset.insert(subset.end(), members[i]->begin(), members[i]->end());
    ++result.selections;
    for (auto& c : interval_clique_sweep(rep.intervals(), subset)) {
      if (is_maximal_clique(g, c)) found.insert(std::move(c));
    }
  };
  // Depth-first over selections whose label sets pairwise intersect.
  auto extend = [&](auto&& self, std::size_t from) -> void {
    for (std::size_t i = from; i < sets.size(); ++i) {
      bool ok = std::all_of(chosen.begin(), chosen.end(), [&](int c) { return sets[c].intersects(sets[i]); });
      if (!ok) continue;
      chosen.push_back(static_cast<int>(i));
      sweep();
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  extend(extend, 0);
  result.cliques.assign(found.begin(), found.end());
  return result;
}

bool within_clique_bound(std::size_t count, int d, int n) {
  if (d >= 6) return true;
  unsigned __int128 bound = static_cast<unsigned __int128>(1) << (1 << d);
  return static_cast<unsigned __int128>(count) <= bound * static_cast<unsigned __int128>(n);
}

WeightedClique max_weight_clique(const Graph& g, const SimRep& rep) {
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.weight(v) <= 0) throw std::invalid_argument("weights must be positive");
  }
  WeightedClique best{Rational(0), {}};
  for (const auto& c : enumerate_maximal_cliques(g, rep).cliques) {
    Rational w = 0;
    for (Vertex v : c) w += g.weight(v);
    if (w > best.weight) best = {w, c};
  }
  return best;
}

namespace {

// (r, id) ascending: the vertex whose interval ends first.
bool ends_first(const SimRep& rep, Vertex u, Vertex v) {
  const Rational& ru = rep.interval(u).r;
  const Rational& rv = rep.interval(v).r;
  return ru < rv || (ru == rv && u < v);
}

struct IndependentFpt {
  const Graph& g;
  const SimRep& rep;
  SearchResult& out;
  std::vector<Vertex> picked;

  bool run(const VertexSet& alive, int k) {
    ++out.nodes;
    if (k == 0) {
      ++out.leaves;
      out.witness = picked;
      return true;
    }
    std::map<LabelSet, Vertex> first;
    for (Vertex v : to_vector(alive)) {
      auto [it, fresh] = first.try_emplace(rep.labels(v), v);
      if (!fresh && ends_first(rep, v, it->second)) it->second = v;
    }
    if (first.empty()) {
      ++out.leaves;
      return false;
    }
    for (const auto& [s, u] : first) {
      picked.push_back(u);
      if (run(alive - g.closed_neighbors(u), k - 1)) return true;
      picked.pop_back();
    }
    return false;
  }
};

// Undominated vertices shrink; every vertex stays a candidate dominator.
struct DominatingFpt {
  const Graph& g;
  const SimRep& rep;
  SearchResult& out;
  std::vector<Vertex> picked;

  bool run(const VertexSet& undominated, int k) {
    ++out.nodes;
    if (undominated.none()) {
      ++out.leaves;
      out.witness = picked;
      return true;
    }
    if (k == 0) {
      ++out.leaves;
      return false;
    }
    Vertex v = -1;
    for (Vertex u : to_vector(undominated)) {
      if (v < 0 || ends_first(rep, u, v)) v = u;
    }
    std::map<LabelSet, Vertex> last;
    for (Vertex u : to_vector(g.closed_neighbors(v))) {
      auto [it, fresh] = last.try_emplace(rep.labels(u), u);
      // Ids ascend, so ties keep the smaller id.
      if (!fresh && rep.interval(it->second).r < rep.interval(u).r) it->second = u;
    }
    for (const auto& [s, u] : last) {
      picked.push_back(u);
      if (run(undominated - g.closed_neighbors(u), k - 1)) return true;
      picked.pop_back();
    }
    return false;
  }
};

}  // namespace

SearchResult independent_set_fpt(const Graph& g, const SimRep& rep, int k) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  require_valid(g, rep);
  SearchResult out;
  IndependentFpt search{g, rep, out, {}};
  out.yes = search.run(full_set(g.n()), k);
  std::sort(out.witness.begin(), out.witness.end());
  return out;
}

SearchResult dominating_set_fpt(const Graph& g, const SimRep& rep, int k) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  require_valid(g, rep);
  SearchResult out;
  // Isolated vertices can only dominate themselves.
  std::vector<Vertex> isolated;
  VertexSet undominated = full_set(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.degree(v) == 0) {
      isolated.push_back(v);
      undominated.reset(v);
    }
  }
  if (static_cast<int>(isolated.size()) > k) {
    out.nodes = out.leaves = 1;
    return out;
  }
  DominatingFpt search{g, rep, out, isolated};
  out.yes = search.run(undominated, k - static_cast<int>(isolated.size()));
  std::sort(out.witness.begin(), out.witness.end());
  return out;
}

bool within_search_bound(long long leaves, int k, int d) {
  long long exponent = static_cast<long long>(k) * d;
  if (exponent >= 62) return true;
  return leaves <= (1LL << exponent);
}

}  // namespace simint

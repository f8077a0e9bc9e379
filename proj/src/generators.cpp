#include "simint/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace simint {

namespace {

std::vector<Edge> all_pairs(int n) {
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  }
  return pairs;
}

}  // namespace

std::vector<Graph> connected_graphs(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("connected_graphs supports 1 <= n <= 6");
  auto pairs = all_pairs(n);
  const int p = static_cast<int>(pairs.size());
  std::vector<std::vector<int>> index(n, std::vector<int>(n, -1));
  for (int i = 0; i < p; ++i) {
    index[pairs[i].first][pairs[i].second] = i;
    index[pairs[i].second][pairs[i].first] = i;
  }
  // Where each pair slot goes under each vertex permutation.
  std::vector<std::vector<int>> moves;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> move(p);
    for (int i = 0; i < p; ++i) move[i] = index[perm[pairs[i].first]][perm[pairs[i].second]];
    moves.push_back(std::move(move));
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << p); ++mask) {
    bool smallest = true;
    for (const auto& move : moves) {
      std::uint32_t image = 0;
      for (int i = 0; i < p; ++i) {
        if (mask >> i & 1) image |= std::uint32_t{1} << move[i];
      }
      if (image < mask) {
        smallest = false;
        break;
      }
    }
    if (!smallest) continue;
    Graph g(n);
    for (int i = 0; i < p; ++i) {
      if (mask >> i & 1) g.add_edge(pairs[i].first, pairs[i].second);
    }
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

Graph random_graph(int n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (auto [u, v] : all_pairs(n)) {
    if (coin(rng)) g.add_edge(u, v);
  }
  return g;
}

std::optional<DisjointPathsInstance> random_dp_instance(int n, int max_arcs, Rng& rng) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Arc> candidates;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) candidates.push_back({order[a], order[b]});
  }
  std::shuffle(candidates.begin(), candidates.end(), rng);
  int limit = std::min<int>(max_arcs, static_cast<int>(candidates.size()));
  int count = std::uniform_int_distribution<int>(1, std::max(1, limit))(rng);
  candidates.resize(count);

  DisjointPathsInstance inst{Digraph(n), Digraph(n)};
  for (const Arc& a : candidates) inst.g.add_arc(a.tail, a.head);

  // Cut the arcs into paths by walking forward while a coin allows it.
  std::vector<bool> used(candidates.size(), false);
  std::vector<Vertex> starts, ends;
  std::bernoulli_distribution extend(0.6);
  for (std::size_t first = 0; first < candidates.size(); ++first) {
    if (used[first]) continue;
    used[first] = true;
    Vertex at = candidates[first].head;
    starts.push_back(candidates[first].tail);
    while (extend(rng)) {
      std::vector<std::size_t> next;
      for (std::size_t a = 0; a < candidates.size(); ++a) {
        if (!used[a] && candidates[a].tail == at) next.push_back(a);
      }
      if (next.empty()) break;
      std::size_t pick = next[std::uniform_int_distribution<std::size_t>(0, next.size() - 1)(rng)];
      used[pick] = true;
      at = candidates[pick].head;
    }
    ends.push_back(at);
  }
  std::vector<std::size_t> sigma(ends.size());
  std::iota(sigma.begin(), sigma.end(), 0);
  std::shuffle(sigma.begin(), sigma.end(), rng);
  for (std::size_t i = 0; i < starts.size(); ++i) {
    Vertex tail = ends[sigma[i]], head = starts[i];
    if (tail == head || inst.h.has_arc(tail, head)) return std::nullopt;
    inst.h.add_arc(tail, head);
  }
  return inst;
}

std::vector<MispInstance> all_misp_instances(int k, int q, int m) {
  if (k < 1 || q < 1 || m < 0) throw std::invalid_argument("need k, q >= 1 and m >= 0");
  int n = k * q;
  std::vector<Edge> cross;
  for (auto [u, v] : all_pairs(n)) {
    if (u / q != v / q) cross.push_back({u, v});
  }
  std::vector<MispInstance> out;
  std::vector<int> seq;
  std::vector<bool> taken(cross.size(), false);
  auto emit = [&] {
    MispInstance inst;
    inst.g = Graph(n);
    inst.k = k;
    inst.q = q;
    for (int e : seq) inst.g.add_edge(cross[e].first, cross[e].second);
    for (int i = 0; i < k; ++i) {
      std::vector<Vertex> c(q);
      std::iota(c.begin(), c.end(), i * q);
      inst.classes.push_back(std::move(c));
    }
    out.push_back(std::move(inst));
  };
  auto grow = [&](auto&& self) -> void {
    if (static_cast<int>(seq.size()) == m) {
      emit();
      return;
    }
    for (std::size_t e = 0; e < cross.size(); ++e) {
      if (taken[e]) continue;
      taken[e] = true;
      seq.push_back(static_cast<int>(e));
      self(self);
      seq.pop_back();
      taken[e] = false;
    }
  };
  grow(grow);
  return out;
}

}  // namespace simint

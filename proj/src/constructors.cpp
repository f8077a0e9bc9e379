#include "simint/constructors.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "simint/errors.hpp"

namespace simint {

int PathDecomposition::width() const {
  std::size_t largest = 0;
  for (const auto& b : bags) largest = std::max(largest, b.size());
  return static_cast<int>(largest) - 1;
}

namespace {

std::string set_name(const std::vector<Vertex>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

std::string edge_name(Vertex u, Vertex v) {
  return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}

std::vector<std::vector<Vertex>> parse_sets(std::istream& in) {
  std::vector<std::vector<Vertex>> sets;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto pos = line.find_first_not_of(" \t\r");
    if (pos != std::string::npos && line[pos] == '#') continue;
    std::istringstream ss(line);
    std::vector<Vertex> set;
    std::string tok;
    while (ss >> tok) {
      try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
        set.push_back(static_cast<Vertex>(v));
      } catch (const std::exception&) {
        throw ParseError(lineno, "malformed vertex id '" + tok + "'");
      }
    }
    if (pos == std::string::npos) continue;
    sets.push_back(std::move(set));
  }
  return sets;
}

bool valid_ids(const Graph& g, const std::vector<Vertex>& s) {
  return std::all_of(s.begin(), s.end(), [&](Vertex v) { return v >= 0 && v < g.n(); });
}

void require(const std::optional<std::string>& problem) {
  if (problem) throw std::invalid_argument(*problem);
}

}  // namespace

std::optional<std::string> check_cover(const Graph& g, const EdgeCliqueCover& cover) {
  std::vector<VertexSet> sets;
  for (std::size_t t = 0; t < cover.cliques.size(); ++t) {
    const auto& c = cover.cliques[t];
    if (!valid_ids(g, c)) return "clique " + std::to_string(t + 1) + " " + set_name(c) + " has an invalid vertex id";
    if (!is_clique(g, c)) return "set " + std::to_string(t + 1) + " " + set_name(c) + " is not a clique";
    sets.push_back(from_vector(g.n(), c));
  }
  for (auto [u, v] : g.edges()) {
    bool covered = std::any_of(sets.begin(), sets.end(), [&](const VertexSet& s) { return s[u] && s[v]; });
    if (!covered) return "edge " + edge_name(u, v) + " is not covered";
  }
  return std::nullopt;
}

std::optional<std::string> check_decomposition(const Graph& g, const PathDecomposition& pd) {
  std::vector<VertexSet> bags;
  for (std::size_t t = 0; t < pd.bags.size(); ++t) {
    const auto& b = pd.bags[t];
    if (!valid_ids(g, b)) return "bag " + std::to_string(t + 1) + " has an invalid vertex id";
    VertexSet s = from_vector(g.n(), b);
    if (s.count() != b.size()) return "bag " + std::to_string(t + 1) + " repeats a vertex";
    bags.push_back(std::move(s));
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    int first = -1, last = -1, count = 0;
    for (int t = 0; t < static_cast<int>(bags.size()); ++t) {
      if (!bags[t][v]) continue;
      if (first < 0) first = t;
      last = t;
      ++count;
    }
    if (first < 0) return "vertex coverage: vertex " + std::to_string(v) + " is in no bag";
    if (last - first + 1 != count) {
      return "consecutiveness: bags containing vertex " + std::to_string(v) + " are not consecutive";
    }
  }
  for (auto [u, v] : g.edges()) {
    bool inside = std::any_of(bags.begin(), bags.end(), [&](const VertexSet& s) { return s[u] && s[v]; });
    if (!inside) return "edge coverage: edge " + edge_name(u, v) + " is in no bag";
  }
  return std::nullopt;
}

EdgeCliqueCover parse_cover(std::istream& in) { return {parse_sets(in)}; }

PathDecomposition parse_decomposition(std::istream& in) { return {parse_sets(in)}; }

void write_sets(std::ostream& out, const std::vector<std::vector<Vertex>>& sets) {
  for (const auto& s : sets) {
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
    out << '\n';
  }
}

SimRep construct_from_edges(const Graph& g) {
  std::vector<LabelSet> labels(g.n());
  int i = 0;
  for (auto [u, v] : g.edges()) {
    ++i;
    labels[u].insert(i);
    labels[v].insert(i);
  }
  return SimRep(g.m(), std::vector<Interval>(g.n(), {0, 1}), std::move(labels));
}

SimRep construct_from_ecc(const Graph& g, const EdgeCliqueCover& cover) {
  require(check_cover(g, cover));
  std::vector<LabelSet> labels(g.n());
  for (int t = 0; t < cover.size(); ++t) {
    for (Vertex v : cover.cliques[t]) labels[v].insert(t + 1);
  }
  return SimRep(cover.size(), std::vector<Interval>(g.n(), {0, 1}), std::move(labels));
}

std::optional<Bipartition> find_bipartition(const Graph& g) {
  std::vector<int> side(g.n(), -1);
  for (Vertex s = 0; s < g.n(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : to_vector(g.neighbors(v))) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          queue.push_back(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition b;
  for (Vertex v = 0; v < g.n(); ++v) (side[v] == 0 ? b.x : b.y).push_back(v);
  return b;
}

SimRep construct_bipartite(const Graph& g, const Bipartition& sides) {
  std::vector<int> side(g.n(), -1);
  for (int s = 0; s < 2; ++s) {
    for (Vertex v : s == 0 ? sides.x : sides.y) {
      if (v < 0 || v >= g.n()) throw std::invalid_argument("side contains invalid vertex " + std::to_string(v));
      if (side[v] >= 0) throw std::invalid_argument("vertex " + std::to_string(v) + " is on both sides");
      side[v] = s;
    }
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    if (side[v] < 0) throw std::invalid_argument("vertex " + std::to_string(v) + " is on no side");
  }
  for (auto [u, v] : g.edges()) {
    if (side[u] == side[v]) throw std::invalid_argument("edge " + edge_name(u, v) + " lies inside one side");
  }
  const auto& x = sides.x.size() <= sides.y.size() ? sides.x : sides.y;
  const auto& y = sides.x.size() <= sides.y.size() ? sides.y : sides.x;

  std::vector<Interval> iv(g.n());
  std::vector<LabelSet> labels(g.n());
  for (std::size_t i = 0; i < x.size(); ++i) {
    iv[x[i]] = {0, 1};
    labels[x[i]].insert(static_cast<int>(i) + 1);
  }
  auto parts = static_cast<std::int64_t>(y.size());
  for (std::size_t j = 0; j < y.size(); ++j) {
    auto jj = static_cast<std::int64_t>(j);
    iv[y[j]] = {Rational(jj, parts), Rational(jj + 1, parts)};
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (g.adjacent(x[i], y[j])) labels[y[j]].insert(static_cast<int>(i) + 1);
    }
  }
  return SimRep(static_cast<int>(x.size()), std::move(iv), std::move(labels));
}

ConstructedRep construct_3partite(int s1, int s2, int s3) {
  if (s1 != s2 || s2 != s3) throw std::invalid_argument("construct_3partite needs three equal part sizes");
  int s = s1;
  if (s < 1) throw std::invalid_argument("part size must be positive");
  std::vector<int> sizes{s, s, s};
  Graph g = make_named_graph(Family::Complete3Partite, sizes);
  std::vector<Interval> iv(3 * s);
  std::vector<LabelSet> labels(3 * s);
  for (int i = 0; i < s; ++i) {
    // x_i: every label, on its own piece of (0,1).
    iv[i] = {Rational(i, s), Rational(i + 1, s)};
    for (int l = 1; l <= s * s; ++l) labels[i].insert(l);
    // y_i: the block S_i; z_i: the i-th element of every block.
    iv[s + i] = {0, 1};
    iv[2 * s + i] = {0, 1};
    for (int j = 0; j < s; ++j) {
      labels[s + i].insert(i * s + j + 1);
      labels[2 * s + i].insert(j * s + i + 1);
    }
  }
  return {std::move(g), SimRep(s * s, std::move(iv), std::move(labels))};
}

ConstructedRep construct_cycle(int n) {
  if (n < 4) throw std::invalid_argument("construct_cycle needs n >= 4");
  int pa = (n - 1) / 2;
  int pb = (n - 2) / 2;
  Rational eps(1, 4 * pa);
  std::vector<Interval> iv(n);
  std::vector<LabelSet> labels(n);

  // A strand of p intervals tiling (0,1), consecutive ones overlapping.
  auto strand = [](int p, int t) {
    Rational h(1, p);
    Rational l = h * t;
    Rational r = t == p - 1 ? Rational(1) : h * (t + 1) + h / 2;
    return Interval{l, r};
  };
  iv[0] = {Rational(-3, 4), eps};
  labels[0] = {1, 2};
  for (int t = 0; t < pa; ++t) {
    iv[1 + t] = strand(pa, t);
    labels[1 + t] = {1};
  }
  iv[pa + 1] = {1 - eps, Rational(7, 4)};
  labels[pa + 1] = {1, 2};
  for (int t = 0; t < pb; ++t) {
    iv[n - 1 - t] = strand(pb, t);
    labels[n - 1 - t] = {2};
  }
  std::vector<int> size{n};
  return {make_named_graph(Family::Cycle, size), SimRep(2, std::move(iv), std::move(labels))};
}

namespace {

// Bags of equal size k where consecutive bags swap exactly one vertex.
// Vertices >= n are isolated helpers. Each entry maps slot -> vertex.
std::vector<std::vector<Vertex>> normalize(const Graph& g, const PathDecomposition& pd, int k,
                                           int& total_vertices) {
  std::vector<std::vector<Vertex>> bags;
  for (const auto& b : pd.bags) {
    if (!b.empty()) bags.push_back(b);
  }
  int next_helper = g.n();
  std::vector<Vertex> slots = bags.front();
  std::sort(slots.begin(), slots.end());
  while (static_cast<int>(slots.size()) < k) slots.push_back(next_helper++);

  std::vector<std::vector<Vertex>> out{slots};
  for (std::size_t t = 1; t < bags.size(); ++t) {
    std::vector<Vertex> want = bags[t];
    std::sort(want.begin(), want.end());
    std::vector<Vertex> current = slots;
    std::sort(current.begin(), current.end());
    std::vector<Vertex> adds, removable;
    std::set_difference(want.begin(), want.end(), current.begin(), current.end(), std::back_inserter(adds));
    std::set_difference(current.begin(), current.end(), want.begin(), want.end(), std::back_inserter(removable));
    // Stale real vertices leave before helpers; ids ascending inside each group.
    std::stable_partition(removable.begin(), removable.end(), [&](Vertex v) { return v < g.n(); });
    for (std::size_t i = 0; i < adds.size(); ++i) {
      auto slot = std::find(slots.begin(), slots.end(), removable[i]) - slots.begin();
      slots[slot] = adds[i];
      out.push_back(slots);
    }
  }
  total_vertices = next_helper;
  return out;
}

}  // namespace

SimRep construct_from_path_decomposition(const Graph& g, const PathDecomposition& pd) {
  require(check_decomposition(g, pd));
  if (g.n() == 0) return SimRep(0, {}, {});
  int k = pd.width() + 1;
  int total = 0;
  auto bags = normalize(g, pd, k, total);

  std::vector<int> first(total, -1), last(total, -1), slot(total, -1);
  std::vector<std::vector<Vertex>> chain(k);
  for (int t = 0; t < static_cast<int>(bags.size()); ++t) {
    for (int s = 0; s < k; ++s) {
      Vertex v = bags[t][s];
      if (first[v] < 0) {
        first[v] = t + 1;
        slot[v] = s;
        chain[s].push_back(v);
      }
      last[v] = t + 1;
    }
  }
  const Rational eps(1, 4);
  std::vector<Interval> iv(total);
  for (Vertex v = 0; v < total; ++v) iv[v] = {first[v] - eps, last[v] + eps};

  auto adjacent = [&](Vertex u, Vertex v) { return u < g.n() && v < g.n() && g.adjacent(u, v); };
  // Total order on right endpoints; on ties the smaller id counts as ending last.
  auto ends_before = [&](Vertex u, Vertex v) { return iv[u].r < iv[v].r || (iv[u].r == iv[v].r && u > v); };

  std::vector<LabelSet> labels(total);
  int pair = 0;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j, ++pair) {
      const int a = 2 * pair + 1;
      const int b = 2 * pair + 2;
      const std::vector<Vertex>* chains[2] = {&chain[i], &chain[j]};
      std::size_t pos[2] = {0, 0};
      int side = ends_before(chain[i][0], chain[j][0]) ? 1 : 0;
      std::size_t at = 0;
      Vertex active = (*chains[side])[0];
      int label = a;
      labels[active].insert(label);
      for (;;) {
        const auto& other = *chains[1 - side];
        std::size_t q = pos[1 - side];
        // Vertices of the other slot that finish under the active interval.
        for (; q < other.size() && ends_before(other[q], active); ++q) {
          Vertex z = other[q];
          if (intervals_intersect(iv[z], iv[active]) && adjacent(z, active)) labels[z].insert(label);
        }
        pos[1 - side] = q;
        if (q == other.size()) break;
        Vertex w = other[q];
        if (!intervals_intersect(iv[w], iv[active])) {
          throw std::logic_error("normalized decomposition lost slot coverage");
        }
        if (!adjacent(active, w)) label = label == a ? b : a;
        labels[w].insert(label);
        pos[side] = at;
        side = 1 - side;
        at = q;
        active = w;
      }
    }
  }
  iv.resize(g.n());
  labels.resize(g.n());
  return SimRep(k * (k - 1), std::move(iv), std::move(labels));
}

}  // namespace simint

#include "simint/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "simint/errors.hpp"

namespace simint {

Graph::Graph(int n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  adj_.assign(n, VertexSet(n));
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= n() || v >= n()) {
    throw std::invalid_argument("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                "} out of range");
  }
  if (u == v) throw std::invalid_argument("self-loop at " + std::to_string(u));
  if (adj_[u][v]) {
    throw std::invalid_argument("duplicate edge {" + std::to_string(u) + "," +
                                std::to_string(v) + "}");
  }
  adj_[u].set(v);
  adj_[v].set(u);
  edges_.push_back(make_edge(u, v));
}

VertexSet Graph::closed_neighbors(Vertex v) const {
  VertexSet s = adj_[v];
  s.set(v);
  return s;
}

void Graph::set_weights(std::vector<Rational> w) {
  if (static_cast<int>(w.size()) != n()) throw std::invalid_argument("weight vector size mismatch");
  weights_ = std::move(w);
}

std::vector<Edge> Graph::sorted_edges() const {
  std::vector<Edge> e = edges_;
  std::sort(e.begin(), e.end());
  return e;
}

bool Graph::operator==(const Graph& other) const {
  return adj_ == other.adj_ && weights_ == other.weights_;
}

VertexSet empty_set(int n) { return VertexSet(n); }

VertexSet full_set(int n) {
  VertexSet s(n);
  s.set();
  return s;
}

std::vector<Vertex> to_vector(const VertexSet& s) {
  std::vector<Vertex> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != VertexSet::npos; i = s.find_next(i)) {
    out.push_back(static_cast<Vertex>(i));
  }
  return out;
}

VertexSet from_vector(int n, std::span<const Vertex> vs) {
  VertexSet s(n);
  for (Vertex v : vs) {
    if (v < 0 || v >= n) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    s.set(v);
  }
  return s;
}

Graph complement(const Graph& g) {
  Graph h(g.n());
  for (Vertex u = 0; u < g.n(); ++u) {
    for (Vertex v = u + 1; v < g.n(); ++v) {
      if (!g.adjacent(u, v)) h.add_edge(u, v);
    }
  }
  return h;
}

bool is_connected(const Graph& g) {
  if (g.n() == 0) return true;
  VertexSet seen(g.n());
  std::vector<Vertex> stack{0};
  seen.set(0);
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    VertexSet fresh = g.neighbors(v) - seen;
    for (Vertex w : to_vector(fresh)) stack.push_back(w);
    seen |= fresh;
  }
  return seen.all();
}

bool is_clique(const Graph& g, std::span<const Vertex> vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (vs[i] == vs[j] || !g.adjacent(vs[i], vs[j])) return false;
    }
  }
  return true;
}

bool is_independent(const Graph& g, std::span<const Vertex> vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (g.adjacent(vs[i], vs[j])) return false;
    }
  }
  return true;
}

namespace {

bool skippable(const std::string& line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

// Reads exactly two integers from the line, nothing else.
bool two_ints(const std::string& line, long long& a, long long& b) {
  std::istringstream ss(line);
  if (!(ss >> a >> b)) return false;
  std::string rest;
  return !(ss >> rest);
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::string line;
  int lineno = 0;
  long long n = -1, m = -1;
  while (std::getline(in, line)) {
    ++lineno;
    if (skippable(line)) continue;
    if (!two_ints(line, n, m) || n < 0 || m < 0) {
      throw ParseError(lineno, "malformed header, expected \"n m\"");
    }
    break;
  }
  if (n < 0) throw ParseError(lineno, "missing header line");
  if (m > n * (n - 1) / 2) throw ParseError(lineno, "edge count exceeds n(n-1)/2");

  Graph g(static_cast<int>(n));
  long long read = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (skippable(line)) continue;
    long long u = 0, v = 0;
    if (!two_ints(line, u, v)) throw ParseError(lineno, "malformed edge line, expected \"u v\"");
    if (read == m) throw ParseError(lineno, "more edge lines than declared");
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(lineno, "vertex id out of range");
    if (u >= v) throw ParseError(lineno, "expected u < v");
    if (g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v))) {
      throw ParseError(lineno, "duplicate edge");
    }
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    ++read;
  }
  if (read != m) {
    throw ParseError(lineno, "expected " + std::to_string(m) + " edge lines, found " +
                                 std::to_string(read));
  }
  return g;
}

Graph parse_graph_string(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  std::vector<Vertex> verts(s.begin(), s.end());
  std::sort(verts.begin(), verts.end());
  if (std::adjacent_find(verts.begin(), verts.end()) != verts.end()) {
    throw std::invalid_argument("duplicate vertex in subset");
  }
  for (Vertex v : verts) {
    if (v < 0 || v >= g.n()) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
  }
  std::vector<int> index(g.n(), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = static_cast<int>(i);

  InducedSubgraph out{Graph(static_cast<int>(verts.size())), verts};
  for (auto [u, v] : g.edges()) {
    if (index[u] >= 0 && index[v] >= 0) out.graph.add_edge(index[u], index[v]);
  }
  if (g.has_weights()) {
    std::vector<Rational> w;
    for (Vertex v : verts) w.push_back(g.weight(v));
    out.graph.set_weights(std::move(w));
  }
  return out;
}

namespace {

void need(std::span<const int> params, std::size_t count, const char* name) {
  if (params.size() != count) {
    throw std::invalid_argument(std::string(name) + " expects " + std::to_string(count) +
                                " parameter(s)");
  }
  for (int p : params) {
    if (p < 0) throw std::invalid_argument(std::string(name) + " parameters must be non-negative");
  }
}

Graph complete_multipartite(std::span<const int> parts) {
  int n = 0;
  std::vector<int> part_of;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    n += parts[i];
    part_of.insert(part_of.end(), parts[i], static_cast<int>(i));
  }
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (part_of[u] != part_of[v]) g.add_edge(u, v);
    }
  }
  return g;
}

}  // namespace

Graph make_named_graph(Family family, std::span<const int> params) {
  switch (family) {
    case Family::Path: {
      need(params, 1, "PATH");
      Graph g(params[0]);
      for (Vertex v = 0; v + 1 < params[0]; ++v) g.add_edge(v, v + 1);
      return g;
    }
    case Family::Cycle: {
      need(params, 1, "CYCLE");
      if (params[0] < 3) throw std::invalid_argument("CYCLE needs n >= 3");
      Graph g(params[0]);
      for (Vertex v = 0; v < params[0]; ++v) g.add_edge(v, (v + 1) % params[0]);
      return g;
    }
    case Family::Complete: {
      need(params, 1, "COMPLETE");
      std::vector<int> ones(params[0], 1);
      return complete_multipartite(ones);
    }
    case Family::CompleteBipartite:
      need(params, 2, "COMPLETE_BIPARTITE");
      return complete_multipartite(params);
    case Family::Complete3Partite:
      need(params, 3, "COMPLETE_3PARTITE");
      return complete_multipartite(params);
    case Family::ComplementOfMatching: {
      need(params, 1, "COMPLEMENT_OF_MATCHING");
      if (params[0] % 2 != 0) throw std::invalid_argument("COMPLEMENT_OF_MATCHING needs even n");
      Graph g(params[0]);
      for (Vertex u = 0; u < params[0]; ++u) {
        for (Vertex v = u + 1; v < params[0]; ++v) {
          if (u / 2 != v / 2) g.add_edge(u, v);
        }
      }
      return g;
    }
    case Family::Star: {
      need(params, 1, "STAR");
      Graph g(params[0] + 1);
      for (Vertex v = 1; v <= params[0]; ++v) g.add_edge(0, v);
      return g;
    }
    case Family::Edgeless:
      need(params, 1, "EDGELESS");
      return Graph(params[0]);
  }
  throw std::invalid_argument("unknown family");
}

void Digraph::add_arc(Vertex tail, Vertex head) {
  if (tail < 0 || head < 0 || tail >= n_ || head >= n_) throw std::invalid_argument("arc out of range");
  if (tail == head) throw std::invalid_argument("loop arc at " + std::to_string(tail));
  if (has_arc(tail, head)) {
    throw std::invalid_argument("duplicate arc (" + std::to_string(tail) + "," +
                                std::to_string(head) + ")");
  }
  arcs_.push_back({tail, head});
}

bool Digraph::has_arc(Vertex tail, Vertex head) const {
  return std::find(arcs_.begin(), arcs_.end(), Arc{tail, head}) != arcs_.end();
}

void Digraph::replace_arc(std::size_t index, Arc arc) {
  if (arc.tail < 0 || arc.head < 0 || arc.tail >= n_ || arc.head >= n_ || arc.tail == arc.head) {
    throw std::invalid_argument("invalid replacement arc");
  }
  arcs_.at(index) = arc;
}

int Digraph::in_degree(Vertex v) const {
  return static_cast<int>(std::count_if(arcs_.begin(), arcs_.end(), [v](const Arc& a) { return a.head == v; }));
}

int Digraph::out_degree(Vertex v) const {
  return static_cast<int>(std::count_if(arcs_.begin(), arcs_.end(), [v](const Arc& a) { return a.tail == v; }));
}

std::optional<std::vector<Vertex>> topological_order(const Digraph& g) {
  std::vector<int> indeg(g.n(), 0);
  std::vector<std::vector<Vertex>> out(g.n());
  for (const Arc& a : g.arcs()) {
    ++indeg[a.head];
    out[a.tail].push_back(a.head);
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (indeg[v] == 0) ready.push(v);
  }
  std::vector<Vertex> order;
  while (!ready.empty()) {
    Vertex v = ready.top();
    ready.pop();
    order.push_back(v);
    for (Vertex w : out[v]) {
      if (--indeg[w] == 0) ready.push(w);
    }
  }
  if (static_cast<int>(order.size()) != g.n()) return std::nullopt;
  return order;
}

}  // namespace simint

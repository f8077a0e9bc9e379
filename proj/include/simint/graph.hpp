#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "simint/rational.hpp"

namespace simint {

using Vertex = int;
using VertexSet = boost::dynamic_bitset<std::uint64_t>;

// Unordered pair, normalized so that first < second.
using Edge = std::pair<Vertex, Vertex>;

inline Edge make_edge(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Simple undirected graph on vertices 0..n-1. Edges keep their insertion order,
// which some constructions use as the canonical edge numbering.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const Edge> edges);

  int n() const { return static_cast<int>(adj_.size()); }
  int m() const { return static_cast<int>(edges_.size()); }

  // Throws std::invalid_argument on self-loops, duplicates and out-of-range ids.
  void add_edge(Vertex u, Vertex v);

  bool adjacent(Vertex u, Vertex v) const { return adj_[u][v]; }
  const VertexSet& neighbors(Vertex v) const { return adj_[v]; }
  VertexSet closed_neighbors(Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(adj_[v].count()); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_weights() const { return weights_.has_value(); }
  Rational weight(Vertex v) const { return weights_ ? (*weights_)[v] : Rational(1); }
  void set_weights(std::vector<Rational> w);

  // Edge list sorted lexicographically; useful for canonical output.
  std::vector<Edge> sorted_edges() const;

  bool operator==(const Graph& other) const;

 private:
  std::vector<VertexSet> adj_;
  std::vector<Edge> edges_;
  std::optional<std::vector<Rational>> weights_;
};

VertexSet empty_set(int n);
VertexSet full_set(int n);
std::vector<Vertex> to_vector(const VertexSet& s);
VertexSet from_vector(int n, std::span<const Vertex> vs);

Graph complement(const Graph& g);
bool is_connected(const Graph& g);
bool is_clique(const Graph& g, std::span<const Vertex> vs);
bool is_independent(const Graph& g, std::span<const Vertex> vs);

// Edge-list text format: header "n m", then m lines "u v" with 0 <= u < v < n.
// Lines starting with '#' and blank lines are ignored.
Graph parse_graph(std::istream& in);
Graph parse_graph_string(const std::string& text);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;  // new id -> old id
};

// Vertices of s, sorted ascending, become 0..|s|-1.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s);

enum class Family {
  Path,
  Cycle,
  Complete,
  CompleteBipartite,
  Complete3Partite,
  ComplementOfMatching,
  Star,
  Edgeless,
};

// Canonical numbering: paths and cycles in order, multipartite graphs part by part,
// STAR(k) has centre 0 and leaves 1..k, COMPLEMENT_OF_MATCHING(n) misses {2i, 2i+1}.
Graph make_named_graph(Family family, std::span<const int> params);

// Directed graph with a set of arcs (no duplicates, no loops).
struct Arc {
  Vertex tail;
  Vertex head;
  auto operator<=>(const Arc&) const = default;
};

class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n) : n_(n) {}

  int n() const { return n_; }
  int m() const { return static_cast<int>(arcs_.size()); }
  const std::vector<Arc>& arcs() const { return arcs_; }

  Vertex add_vertex() { return n_++; }
  void add_arc(Vertex tail, Vertex head);
  bool has_arc(Vertex tail, Vertex head) const;
  void replace_arc(std::size_t index, Arc arc);

  int in_degree(Vertex v) const;
  int out_degree(Vertex v) const;

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;
};

// Kahn's algorithm, smallest ready vertex first. Empty optional when cyclic.
std::optional<std::vector<Vertex>> topological_order(const Digraph& g);

}  // namespace simint

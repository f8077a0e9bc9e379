#include "simint/reductions.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "simint/errors.hpp"

namespace simint {

namespace {

std::string vname(Vertex v) { return "vertex " + std::to_string(v); }

int h_degree(const Digraph& h, Vertex v) { return h.in_degree(v) + h.out_degree(v); }

// Reads non-comment, non-blank lines as integer rows, keeping line numbers.
struct Rows {
  std::vector<std::vector<long long>> rows;
  std::vector<int> lines;
};

Rows read_rows(std::istream& in) {
  Rows out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::istringstream ss(line);
    std::vector<long long> row;
    std::string tok;
    while (ss >> tok) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) throw ParseError(lineno, "malformed integer '" + tok + "'");
      row.push_back(v);
    }
    out.rows.push_back(std::move(row));
    out.lines.push_back(lineno);
  }
  return out;
}

void expect_width(const Rows& r, std::size_t i, std::size_t width, const char* what) {
  if (r.rows[i].size() != width) {
    throw ParseError(r.lines[i], std::string("expected ") + std::to_string(width) + " integers in " + what);
  }
}

Vertex checked_id(const Rows& r, std::size_t i, long long v, int n) {
  if (v < 0 || v >= n) throw ParseError(r.lines[i], "vertex id out of range");
  return static_cast<Vertex>(v);
}

}  // namespace

std::optional<std::string> check_instance(const DisjointPathsInstance& inst) {
  int n = inst.g.n();
  if (inst.h.n() != n) return "G and H have different vertex counts";
  for (Vertex v = 0; v < n; ++v) {
    int in = inst.g.in_degree(v) + inst.h.in_degree(v);
    int out = inst.g.out_degree(v) + inst.h.out_degree(v);
    if (in != out) {
      return vname(v) + ": in-degree " + std::to_string(in) + " differs from out-degree " + std::to_string(out) +
             " in G+H";
    }
  }
  // Kahn's algorithm; whatever survives lies on or behind a cycle.
  std::vector<int> indeg(n, 0);
  for (const Arc& a : inst.g.arcs()) ++indeg[a.head];
  std::vector<Vertex> ready;
  for (Vertex v = 0; v < n; ++v) {
    if (indeg[v] == 0) ready.push_back(v);
  }
  int done = 0;
  while (!ready.empty()) {
    Vertex v = ready.back();
    ready.pop_back();
    ++done;
    for (const Arc& a : inst.g.arcs()) {
      if (a.tail == v && --indeg[a.head] == 0) ready.push_back(a.head);
    }
  }
  if (done < n) {
    for (Vertex v = 0; v < n; ++v) {
      if (indeg[v] > 0) return "G has a directed cycle reaching " + vname(v);
    }
  }
  return std::nullopt;
}

int xi(const Digraph& h) {
  int total = 0;
  for (Vertex v = 0; v < h.n(); ++v) total += std::max(0, h_degree(h, v) - 1);
  return total;
}

Preprocessed preprocess_degree_one(const DisjointPathsInstance& inst) {
  if (auto problem = check_instance(inst)) throw std::invalid_argument(*problem);
  Preprocessed out{inst, {xi(inst.h)}};
  Digraph& g = out.instance.g;
  Digraph& h = out.instance.h;
  for (;;) {
    Vertex w = -1;
    for (Vertex v = 0; v < h.n() && w < 0; ++v) {
      if (h_degree(h, v) >= 2) w = v;
    }
    if (w < 0) break;
    Vertex fresh = g.add_vertex();
    h.add_vertex();
    const auto& arcs = h.arcs();
    auto into = std::find_if(arcs.begin(), arcs.end(), [&](const Arc& a) { return a.head == w; });
    if (into != arcs.end()) {
      // (v,w) in H: the demand now ends at w', which reaches w only through w'->w.
      g.add_arc(fresh, w);
      h.replace_arc(static_cast<std::size_t>(into - arcs.begin()), {into->tail, fresh});
    } else {
      auto from = std::find_if(arcs.begin(), arcs.end(), [&](const Arc& a) { return a.tail == w; });
      g.add_arc(w, fresh);
      h.replace_arc(static_cast<std::size_t>(from - arcs.begin()), {fresh, from->head});
    }
    out.xi_trace.push_back(xi(h));
  }
  return out;
}

PathPacking solve_disjoint_paths(const DisjointPathsInstance& inst, int max_arcs) {
  if (auto problem = check_instance(inst)) throw std::invalid_argument(*problem);
  if (inst.g.m() > max_arcs) throw CapExceeded("solve_disjoint_paths", inst.g.m(), max_arcs);
  const auto& garcs = inst.g.arcs();
  const auto& demands = inst.h.arcs();
  std::vector<std::vector<int>> out_arcs(inst.g.n());
  for (int a = 0; a < static_cast<int>(garcs.size()); ++a) out_arcs[garcs[a].tail].push_back(a);

  PathPacking result;
  std::vector<bool> used(garcs.size(), false);
  std::vector<std::vector<int>> paths(demands.size());

  // Demand (s,t) needs a path from t to s; G is acyclic so every walk is a path.
  auto route = [&](auto&& self, std::size_t d, Vertex at) -> bool {
    ++result.nodes;
    if (at == demands[d].tail) {
      if (d + 1 == demands.size()) return true;
      return self(self, d + 1, demands[d + 1].head);
    }
    for (int a : out_arcs[at]) {
      if (used[a]) continue;
      used[a] = true;
      paths[d].push_back(a);
      if (self(self, d, garcs[a].head)) return true;
      paths[d].pop_back();
      used[a] = false;
    }
    return false;
  };
  result.yes = demands.empty() || route(route, 0, demands[0].head);
  if (result.yes) result.paths = std::move(paths);
  return result;
}

ColoringGadget coloring_gadget(const DisjointPathsInstance& inst) {
  if (auto problem = check_instance(inst)) throw std::invalid_argument(*problem);
  for (Vertex v = 0; v < inst.h.n(); ++v) {
    if (h_degree(inst.h, v) > 1) {
      throw std::invalid_argument(vname(v) + " has H-degree " + std::to_string(h_degree(inst.h, v)) +
                                  "; run preprocess_degree_one first");
    }
  }
  int n = inst.g.n();
  ColoringGadget out;
  out.order = *topological_order(inst.g);
  std::vector<std::int64_t> pos(n);
  for (int i = 0; i < n; ++i) pos[out.order[i]] = i + 1;

  std::vector<Interval> iv;
  std::vector<LabelSet> labels;
  for (const Arc& a : inst.g.arcs()) {
    iv.push_back({Rational(pos[a.tail]), Rational(pos[a.head])});
    labels.push_back({1});
  }
  for (const Arc& a : inst.h.arcs()) {
    std::int64_t i = pos[a.tail], j = pos[a.head];
    if (i <= j) {
      throw std::invalid_argument("H-arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) +
                                  ") points forward in the topological order of G");
    }
    iv.push_back({Rational(0), Rational(j)});
    labels.push_back({1, 2});
    iv.push_back({Rational(i), Rational(n + 1)});
    labels.push_back({1, 2});
    iv.push_back({Rational(j), Rational(i)});
    labels.push_back({2});
  }
  out.rep = SimRep(2, std::move(iv), std::move(labels));
  out.graph = realized_graph(out.rep);
  out.k = inst.h.m();
  return out;
}

DisjointPathsInstance parse_dp_instance(std::istream& in) {
  Rows r = read_rows(in);
  if (r.rows.empty()) throw ParseError(0, "missing header 'n g h'");
  expect_width(r, 0, 3, "header 'n g h'");
  long long n = r.rows[0][0], ga = r.rows[0][1], ha = r.rows[0][2];
  if (n < 0 || ga < 0 || ha < 0) throw ParseError(r.lines[0], "negative count in header");
  if (static_cast<long long>(r.rows.size()) - 1 != ga + ha) {
    throw ParseError(0, "expected " + std::to_string(ga + ha) + " arc lines, found " +
                            std::to_string(r.rows.size() - 1));
  }
  DisjointPathsInstance inst{Digraph(static_cast<int>(n)), Digraph(static_cast<int>(n))};
  for (std::size_t i = 1; i < r.rows.size(); ++i) {
    expect_width(r, i, 2, "arc line");
    Vertex u = checked_id(r, i, r.rows[i][0], static_cast<int>(n));
    Vertex v = checked_id(r, i, r.rows[i][1], static_cast<int>(n));
    Digraph& target = static_cast<long long>(i) <= ga ? inst.g : inst.h;
    try {
      target.add_arc(u, v);
    } catch (const std::invalid_argument& e) {
      throw ParseError(r.lines[i], e.what());
    }
  }
  return inst;
}

void write_dp_instance(std::ostream& out, const DisjointPathsInstance& inst) {
  out << inst.g.n() << ' ' << inst.g.m() << ' ' << inst.h.m() << '\n';
  for (const Arc& a : inst.g.arcs()) out << a.tail << ' ' << a.head << '\n';
  for (const Arc& a : inst.h.arcs()) out << a.tail << ' ' << a.head << '\n';
}

std::optional<std::string> check_instance(const MispInstance& inst) {
  if (inst.k < 1) return "k must be at least 1";
  if (inst.q < 1) return "q must be at least 1";
  if (static_cast<int>(inst.classes.size()) != inst.k) return "expected " + std::to_string(inst.k) + " classes";
  std::vector<int> seen(inst.g.n(), 0);
  for (int i = 0; i < inst.k; ++i) {
    const auto& c = inst.classes[i];
    if (static_cast<int>(c.size()) != inst.q) {
      return "class " + std::to_string(i + 1) + " has " + std::to_string(c.size()) + " vertices, expected " +
             std::to_string(inst.q);
    }
    for (Vertex v : c) {
      if (v < 0 || v >= inst.g.n()) return "class " + std::to_string(i + 1) + " names invalid " + vname(v);
      if (seen[v]++) return vname(v) + " appears in two classes";
    }
    if (!is_independent(inst.g, c)) return "class " + std::to_string(i + 1) + " is not independent";
  }
  for (Vertex v = 0; v < inst.g.n(); ++v) {
    if (!seen[v]) return vname(v) + " is in no class";
  }
  return std::nullopt;
}

bool is_multicolored_independent(const MispInstance& inst, std::span<const int> tuple) {
  std::vector<Vertex> pick;
  for (int i = 0; i < inst.k; ++i) pick.push_back(inst.classes[i][tuple[i]]);
  return is_independent(inst.g, pick);
}

std::optional<std::vector<int>> solve_misp(const MispInstance& inst) {
  if (auto problem = check_instance(inst)) throw std::invalid_argument(*problem);
  std::vector<int> tuple(inst.k, 0);
  for (;;) {
    if (is_multicolored_independent(inst, tuple)) return tuple;
    int i = inst.k - 1;
    while (i >= 0 && ++tuple[i] == inst.q) tuple[i--] = 0;
    if (i < 0) return std::nullopt;
  }
}

IdspGadget misp_to_idsp_gadget(const MispInstance& inst, SSpacing spacing) {
  if (auto problem = check_instance(inst)) throw std::invalid_argument(*problem);
  const int k = inst.k, q = inst.q, m = inst.g.m();
  IdspGadget out;
  out.k = k;
  out.m = m;
  out.q = q;
  out.target = k * (m + 1);
  out.epsilon = Rational(1, 2 * q * (k + 1));
  const Rational eps = out.epsilon;

  // Class and position (both 1-based) of every source vertex.
  std::vector<int> cls(inst.g.n()), at(inst.g.n());
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < q; ++j) {
      cls[inst.classes[i][j]] = i + 1;
      at[inst.classes[i][j]] = j + 1;
    }
  }

  // I^i_j(gamma), all indices 1-based.
  auto w_interval = [&](int i, int j, int gamma) {
    Rational l = Rational(gamma - 1) + Rational(j - 1, q) + eps * i;
    return Interval{l, l + 1};
  };

  std::vector<Interval> iv;
  std::vector<LabelSet> labels;
  out.w.assign(k, std::vector<std::vector<Vertex>>(q));
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= q; ++j) {
      for (int gamma = 1; gamma <= m + 1; ++gamma) {
        out.w[i - 1][j - 1].push_back(static_cast<Vertex>(iv.size()));
        iv.push_back(w_interval(i, j, gamma));
        labels.push_back({i});
      }
    }
  }
  out.s.assign(k, {});
  const Rational base(q - 1, q);
  for (int i = 1; i <= k; ++i) {
    for (int gamma = 0; gamma <= 2 * m * q + 1; ++gamma) {
      out.s[i - 1].push_back(static_cast<Vertex>(iv.size()));
      if (spacing == SSpacing::HalfStep) {
        iv.push_back({base + Rational(gamma, 2 * q) + eps * i, base + Rational(gamma + 1, 2 * q) + eps * i});
      } else {
        iv.push_back({base + Rational(gamma, q) + eps * i, Rational(1) + Rational(gamma, q) + eps * i});
      }
      labels.push_back({i});
    }
  }

  // e_gamma = v^i_a v^j_b with a <= b (i < j on ties).
  struct EdgeInfo {
    Interval span;
    int label;
    int ci, cj;
    Vertex u, v;
  };
  std::vector<EdgeInfo> edges;
  for (int gamma = 1; gamma <= m; ++gamma) {
    auto [u, v] = inst.g.edges()[gamma - 1];
    if (std::make_pair(at[u], cls[u]) > std::make_pair(at[v], cls[v])) std::swap(u, v);
    Interval span{w_interval(cls[u], at[u], gamma).r, w_interval(cls[v], at[v], gamma + 1).l};
    int label = gamma % 2 == 1 ? k + 1 : k + 2;
    edges.push_back({span, label, cls[u], cls[v], u, v});
    out.edge.push_back(static_cast<Vertex>(iv.size()));
    iv.push_back(span);
    labels.push_back({label});
  }

  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= q; ++j) {
      Vertex self = inst.classes[i - 1][j - 1];
      for (Vertex x : out.w[i - 1][j - 1]) {
        std::vector<int> met;
        for (const EdgeInfo& e : edges) {
          if (!intervals_intersect(iv[x], e.span)) continue;
          met.push_back(e.label);
          // The endpoint of e in V_i, if any, must differ from v^i_j.
          Vertex end = e.ci == i ? e.u : e.cj == i ? e.v : -1;
          if (end >= 0 && end != self) labels[x].insert(e.label);
        }
        if (met.size() > 2 || (met.size() == 2 && met[0] == met[1])) {
          throw std::logic_error("vertex interval " + std::to_string(x) + " meets " + std::to_string(met.size()) +
                                 " edge intervals with clashing labels");
        }
      }
    }
  }

  out.rep = SimRep(k + 2, std::move(iv), std::move(labels));
  out.graph = realized_graph(out.rep);
  return out;
}

std::vector<Vertex> w_union(const IdspGadget& gadget, std::span<const int> tuple) {
  std::vector<Vertex> out;
  for (int i = 0; i < gadget.k; ++i) {
    const auto& part = gadget.w[i][tuple[i]];
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool check_w_structure(const IdspGadget& gadget, std::span<const Vertex> ids) {
  VertexSet in = from_vector(gadget.graph.n(), ids);
  for (int i = 0; i < gadget.k; ++i) {
    bool some = std::any_of(gadget.w[i].begin(), gadget.w[i].end(), [&](const std::vector<Vertex>& part) {
      return std::all_of(part.begin(), part.end(), [&](Vertex v) { return in[v]; });
    });
    if (!some) return false;
  }
  return true;
}

MispInstance parse_misp_instance(std::istream& in) {
  Rows r = read_rows(in);
  if (r.rows.empty()) throw ParseError(0, "missing header 'n m k q'");
  expect_width(r, 0, 4, "header 'n m k q'");
  long long n = r.rows[0][0], m = r.rows[0][1], k = r.rows[0][2], q = r.rows[0][3];
  if (n < 0 || m < 0 || k < 1 || q < 1) throw ParseError(r.lines[0], "header needs n, m >= 0 and k, q >= 1");
  if (static_cast<long long>(r.rows.size()) - 1 != m + k) {
    throw ParseError(0, "expected " + std::to_string(m) + " edge lines and " + std::to_string(k) +
                            " class lines, found " + std::to_string(r.rows.size() - 1) + " lines");
  }
  MispInstance inst;
  inst.g = Graph(static_cast<int>(n));
  inst.k = static_cast<int>(k);
  inst.q = static_cast<int>(q);
  for (std::size_t i = 1; i <= static_cast<std::size_t>(m); ++i) {
    expect_width(r, i, 2, "edge line");
    Vertex u = checked_id(r, i, r.rows[i][0], static_cast<int>(n));
    Vertex v = checked_id(r, i, r.rows[i][1], static_cast<int>(n));
    try {
      inst.g.add_edge(u, v);
    } catch (const std::invalid_argument& e) {
      throw ParseError(r.lines[i], e.what());
    }
  }
  for (std::size_t i = static_cast<std::size_t>(m) + 1; i < r.rows.size(); ++i) {
    expect_width(r, i, static_cast<std::size_t>(q), "class line");
    std::vector<Vertex> c;
    for (long long v : r.rows[i]) c.push_back(checked_id(r, i, v, static_cast<int>(n)));
    inst.classes.push_back(std::move(c));
  }
  if (auto problem = check_instance(inst)) throw ParseError(0, *problem);
  return inst;
}

void write_misp_instance(std::ostream& out, const MispInstance& inst) {
  out << inst.g.n() << ' ' << inst.g.m() << ' ' << inst.k << ' ' << inst.q << '\n';
  for (auto [u, v] : inst.g.edges()) out << u << ' ' << v << '\n';
  for (const auto& c : inst.classes) {
    for (std::size_t j = 0; j < c.size(); ++j) out << (j ? " " : "") << c[j];
    out << '\n';
  }
}

}  // namespace simint

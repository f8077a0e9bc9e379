#include "simint/rep_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "simint/errors.hpp"

namespace simint {

using nlohmann::json;

namespace {

const json& field(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) throw FormatError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw FormatError(path + "/" + key, "missing field");
  return *it;
}

long long integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw FormatError(path, "expected an integer");
  return j.get<long long>();
}

Rational rational(const json& j, const std::string& path) {
  if (!j.is_string()) throw FormatError(path, "expected a rational string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::exception& e) {
    throw FormatError(path, e.what());
  }
}

const json& array(const json& j, const std::string& path) {
  if (!j.is_array()) throw FormatError(path, "expected an array");
  return j;
}

}  // namespace

RepDocument read_rep(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError("", std::string("malformed document: ") + e.what());
  }
  long long n = integer(field(doc, "n", ""), "/n");
  long long d = integer(field(doc, "d", ""), "/d");
  if (n < 0) throw FormatError("/n", "negative vertex count");
  if (d < 0 || d > kMaxLabels) throw FormatError("/d", "d outside 0.." + std::to_string(kMaxLabels));

  const json& verts = array(field(doc, "vertices", ""), "/vertices");
  if (static_cast<long long>(verts.size()) != n) {
    throw FormatError("/vertices", "expected " + std::to_string(n) + " vertices");
  }
  std::vector<Interval> intervals(n);
  std::vector<LabelSet> labels(n);
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < verts.size(); ++i) {
    std::string p = "/vertices/" + std::to_string(i);
    const json& v = verts[i];
    long long id = integer(field(v, "id", p), p + "/id");
    if (id < 0 || id >= n) throw FormatError(p + "/id", "vertex id out of range");
    if (seen[id]) throw FormatError(p + "/id", "duplicate vertex id");
    seen[id] = true;
    Rational l = rational(field(v, "l", p), p + "/l");
    Rational r = rational(field(v, "r", p), p + "/r");
    if (!(l < r)) throw FormatError(p, "degenerate interval");
    intervals[id] = {l, r};
    const json& ls = array(field(v, "labels", p), p + "/labels");
    for (std::size_t k = 0; k < ls.size(); ++k) {
      std::string lp = p + "/labels/" + std::to_string(k);
      long long label = integer(ls[k], lp);
      if (label < 1 || label > d) throw FormatError(lp, "label out of range");
      labels[id].insert(static_cast<int>(label));
    }
  }

  Graph g(static_cast<int>(n));
  const json& edges = array(field(doc, "edges", ""), "/edges");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::string p = "/edges/" + std::to_string(i);
    const json& e = array(edges[i], p);
    if (e.size() != 2) throw FormatError(p, "expected [u, v]");
    long long u = integer(e[0], p + "/0");
    long long v = integer(e[1], p + "/1");
    if (u < 0 || v < 0 || u >= n || v >= n) throw FormatError(p, "vertex id out of range");
    if (u == v) throw FormatError(p, "self-loop");
    if (g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v))) throw FormatError(p, "duplicate edge");
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return {std::move(g), SimRep(static_cast<int>(d), std::move(intervals), std::move(labels))};
}

RepDocument read_rep_string(const std::string& text) {
  std::istringstream in(text);
  return read_rep(in);
}

RepDocument read_rep_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_rep(in);
}

void write_rep(std::ostream& out, const Graph& g, const SimRep& rep) {
  if (g.n() != rep.n()) throw std::invalid_argument("graph and representation sizes differ");
  out << "{\n  \"n\": " << rep.n() << ",\n  \"d\": " << rep.d() << ",\n  \"vertices\": [";
  for (Vertex v = 0; v < rep.n(); ++v) {
    nlohmann::ordered_json j;
    j["id"] = v;
    j["l"] = to_string(rep.interval(v).l);
    j["r"] = to_string(rep.interval(v).r);
    j["labels"] = rep.labels(v).to_vector();
    out << (v == 0 ? "\n    " : ",\n    ") << j.dump();
  }
  out << (rep.n() == 0 ? "],\n" : "\n  ],\n") << "  \"edges\": [";
  bool first = true;
  for (auto [u, v] : g.sorted_edges()) {
    out << (first ? "" : ", ") << '[' << u << ", " << v << ']';
    first = false;
  }
  out << "]\n}\n";
}

std::string write_rep_string(const Graph& g, const SimRep& rep) {
  std::ostringstream out;
  write_rep(out, g, rep);
  return out.str();
}

void write_rep_file(const std::string& path, const Graph& g, const SimRep& rep) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_rep(out, g, rep);
}

}  // namespace simint

#pragma once

#include <iosfwd>
#include <string>

#include "simint/graph.hpp"
#include "simint/simrep.hpp"

namespace simint {

// A representation document carries the target graph next to the representation.
struct RepDocument {
  Graph graph;
  SimRep rep;
};

// Throws FormatError naming the offending JSON path.
RepDocument read_rep(std::istream& in);
RepDocument read_rep_string(const std::string& text);
RepDocument read_rep_file(const std::string& path);

// Canonical layout: vertices by id, labels ascending, rationals reduced,
// edges sorted, one vertex per line.
void write_rep(std::ostream& out, const Graph& g, const SimRep& rep);
std::string write_rep_string(const Graph& g, const SimRep& rep);
void write_rep_file(const std::string& path, const Graph& g, const SimRep& rep);

}  // namespace simint

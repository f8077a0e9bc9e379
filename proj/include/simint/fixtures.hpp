#pragma once

#include <string>
#include <vector>

#include "simint/graph.hpp"
#include "simint/simrep.hpp"

namespace simint {

struct Fixture {
  std::string name;
  Graph graph;
  SimRep rep;
};

// The 4-cycle with d = 2: two disjoint {1,2} intervals, each overlapping a
// {1} and a {2} interval.
Fixture two_label_c4();

// Subdivided claw (asteroidal triple) on 7 vertices with d = 2; vertex 0 is the centre.
Fixture subdivided_claw();

// Representations from every constructor on small named graphs.
std::vector<Fixture> standard_fixtures();

}  // namespace simint

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <sstream>

#include "oracle_support.hpp"
#include "simint/errors.hpp"
#include "simint/generators.hpp"
#include "simint/oracles.hpp"
#include "simint/reductions.hpp"

using namespace simint;
namespace ref = testing_oracle;

namespace {

DisjointPathsInstance dp(int n, std::vector<Arc> g_arcs, std::vector<Arc> h_arcs) {
  DisjointPathsInstance inst{Digraph(n), Digraph(n)};
  for (Arc a : g_arcs) inst.g.add_arc(a.tail, a.head);
  for (Arc a : h_arcs) inst.h.add_arc(a.tail, a.head);
  return inst;
}

// Every demand is routable alone but not all of them together.
DisjointPathsInstance competing_demands() {
  return dp(7, {{3, 0}, {5, 3}, {2, 1}, {6, 3}, {4, 2}, {2, 0}, {6, 1}, {0, 1}, {4, 3}},
            {{1, 3}, {3, 5}, {1, 2}, {3, 6}, {1, 4}, {0, 6}, {3, 4}});
}

MispInstance misp(int k, int q, std::vector<Edge> edges) {
  MispInstance inst;
  inst.g = Graph(k * q);
  inst.k = k;
  inst.q = q;
  for (auto [u, v] : edges) inst.g.add_edge(u, v);
  for (int i = 0; i < k; ++i) {
    std::vector<Vertex> c(q);
    std::iota(c.begin(), c.end(), i * q);
    inst.classes.push_back(c);
  }
  return inst;
}

// Independent check of a path packing: each H-arc (s,t) gets a walk t -> s
// along G-arcs, and no G-arc is used twice.
bool valid_packing(const DisjointPathsInstance& inst, const PathPacking& p) {
  if (p.paths.size() != inst.h.arcs().size()) return false;
  std::vector<int> used(inst.g.m(), 0);
  for (std::size_t i = 0; i < p.paths.size(); ++i) {
    Vertex at = inst.h.arcs()[i].head;
    for (int a : p.paths[i]) {
      if (a < 0 || a >= inst.g.m() || used[a]++) return false;
      if (inst.g.arcs()[a].tail != at) return false;
      at = inst.g.arcs()[a].head;
    }
    if (at != inst.h.arcs()[i].tail || p.paths[i].empty()) return false;
  }
  return true;
}

int chromatic(const Graph& g) {
  OracleCaps caps;
  caps.small = kMaskCeiling;
  return brute_force(Problem::ChromaticNumber, g, caps).value;
}

int min_ids(const Graph& g) {
  OracleCaps caps;
  caps.subset = kMaskCeiling;
  return brute_force(Problem::MinIndependentDominatingSet, g, caps).value;
}

}  // namespace

TEST(DisjointPaths, InstanceChecks) {
  EXPECT_FALSE(check_instance(dp(3, {{0, 1}, {1, 2}}, {{2, 0}})));
  auto cyclic = check_instance(dp(2, {{0, 1}, {1, 0}}, {}));
  ASSERT_TRUE(cyclic);
  EXPECT_NE(cyclic->find("cycle"), std::string::npos);
  auto unbalanced = check_instance(dp(3, {{0, 1}, {1, 2}}, {}));
  ASSERT_TRUE(unbalanced);
  EXPECT_NE(unbalanced->find("in-degree"), std::string::npos);
}

TEST(DisjointPaths, Xi) {
  Digraph h(4);
  EXPECT_EQ(xi(h), 0);
  h.add_arc(1, 0);
  h.add_arc(2, 0);
  h.add_arc(0, 3);
  EXPECT_EQ(xi(h), 2);
}

TEST(DisjointPaths, SolverExamples) {
  auto path = dp(3, {{0, 1}, {1, 2}}, {{2, 0}});
  PathPacking yes = solve_disjoint_paths(path);
  ASSERT_TRUE(yes.yes);
  EXPECT_TRUE(valid_packing(path, yes));
  EXPECT_EQ(yes.paths[0], (std::vector<int>{0, 1}));

  EXPECT_FALSE(solve_disjoint_paths(competing_demands()).yes);
  EXPECT_THROW(solve_disjoint_paths(competing_demands(), 8), CapExceeded);
}

TEST(Preprocess, AlreadyDegreeOneIsUnchanged) {
  auto path = dp(3, {{0, 1}, {1, 2}}, {{2, 0}});
  Preprocessed p = preprocess_degree_one(path);
  EXPECT_EQ(p.xi_trace, std::vector<int>{0});
  EXPECT_EQ(p.instance.g.arcs(), path.g.arcs());
  EXPECT_EQ(p.instance.h.arcs(), path.h.arcs());
}

TEST(Preprocess, TwoDemandsIntoOneVertexSplitOnce) {
  auto inst = dp(3, {{0, 1}, {0, 2}}, {{1, 0}, {2, 0}});
  ASSERT_FALSE(check_instance(inst));
  Preprocessed p = preprocess_degree_one(inst);
  EXPECT_EQ(p.xi_trace, (std::vector<int>{1, 0}));
  EXPECT_EQ(p.instance.g.n(), 4);
  EXPECT_FALSE(check_instance(p.instance));
  EXPECT_EQ(solve_disjoint_paths(p.instance).yes, solve_disjoint_paths(inst).yes);
}

TEST(Preprocess, RandomInstancesKeepTheirAnswer) {
  Rng rng(71);
  int checked = 0;
  for (int trial = 0; trial < 300 && checked < 60; ++trial) {
    auto inst = random_dp_instance(5 + trial % 3, 8, rng);
    if (!inst) continue;
    ASSERT_FALSE(check_instance(*inst));
    ++checked;
    Preprocessed p = preprocess_degree_one(*inst);
    EXPECT_EQ(p.xi_trace.front(), xi(inst->h));
    EXPECT_EQ(p.xi_trace.back(), 0);
    for (std::size_t i = 1; i < p.xi_trace.size(); ++i) EXPECT_EQ(p.xi_trace[i], p.xi_trace[i - 1] - 1);
    EXPECT_FALSE(check_instance(p.instance));
    PathPacking before = solve_disjoint_paths(*inst);
    PathPacking after = solve_disjoint_paths(p.instance, 64);
    EXPECT_EQ(before.yes, after.yes);
    if (before.yes) {
      EXPECT_TRUE(valid_packing(*inst, before));
    }
    if (after.yes) {
      EXPECT_TRUE(valid_packing(p.instance, after));
    }
  }
  EXPECT_GE(checked, 40);
}

TEST(ColoringGadget, PathIsAYesInstanceWithEdgelessGadget) {
  ColoringGadget gadget = coloring_gadget(dp(3, {{0, 1}, {1, 2}}, {{2, 0}}));
  EXPECT_EQ(gadget.k, 1);
  EXPECT_EQ(gadget.graph.m(), 0);
  EXPECT_EQ(gadget.rep.d(), 2);
  EXPECT_TRUE(verify_representation(gadget.graph, gadget.rep).valid);
  EXPECT_EQ(chromatic(gadget.graph), 1);
}

TEST(ColoringGadget, CompetingDemandsNeedMoreColours) {
  Preprocessed p = preprocess_degree_one(competing_demands());
  ColoringGadget gadget = coloring_gadget(p.instance);
  EXPECT_TRUE(verify_representation(gadget.graph, gadget.rep).valid);
  EXPECT_GT(chromatic(gadget.graph), gadget.k);
}

TEST(ColoringGadget, RejectsUnpreparedInstances) {
  EXPECT_THROW(coloring_gadget(dp(3, {{0, 1}, {0, 2}}, {{1, 0}, {2, 0}})), std::invalid_argument);
  EXPECT_THROW(coloring_gadget(dp(2, {{0, 1}, {1, 0}}, {})), std::invalid_argument);
}

TEST(ColoringGadget, ChromaticNumberMatchesPackingOnRandomInstances) {
  Rng rng(73);
  int decided = 0;
  for (int trial = 0; trial < 400 && decided < 40; ++trial) {
    auto inst = random_dp_instance(4 + trial % 3, 7, rng);
    if (!inst) continue;
    Preprocessed p = preprocess_degree_one(*inst);
    bool yes = solve_disjoint_paths(*inst).yes;
    try {
      ColoringGadget gadget = coloring_gadget(p.instance);
      ++decided;
      EXPECT_TRUE(verify_representation(gadget.graph, gadget.rep).valid);
      EXPECT_EQ(gadget.rep.d(), 2);
      EXPECT_EQ(chromatic(gadget.graph) == gadget.k, yes);
    } catch (const std::invalid_argument&) {
      // Only forward H-arcs are rejected, and those admit no path.
      EXPECT_FALSE(yes);
    }
  }
  EXPECT_GE(decided, 20);
}

TEST(DisjointPathsIo, RoundTripAndErrors) {
  auto inst = competing_demands();
  std::ostringstream out;
  write_dp_instance(out, inst);
  std::istringstream in(out.str());
  auto back = parse_dp_instance(in);
  EXPECT_EQ(back.g.arcs(), inst.g.arcs());
  EXPECT_EQ(back.h.arcs(), inst.h.arcs());

  std::istringstream short_file("3 2 1\n0 1\n");
  EXPECT_THROW(parse_dp_instance(short_file), ParseError);
  std::istringstream empty("# nothing\n");
  EXPECT_THROW(parse_dp_instance(empty), ParseError);
  std::istringstream range("2 1 0\n0 5\n");
  EXPECT_THROW(parse_dp_instance(range), ParseError);
}

TEST(Misp, SolverAndChecks) {
  auto yes = misp(2, 2, {{0, 2}});
  auto tuple = solve_misp(yes);
  ASSERT_TRUE(tuple);
  EXPECT_TRUE(is_multicolored_independent(yes, *tuple));
  EXPECT_FALSE(is_multicolored_independent(yes, std::vector<int>{0, 0}));

  EXPECT_FALSE(solve_misp(misp(2, 1, {{0, 1}})));
  EXPECT_TRUE(solve_misp(misp(1, 1, {})));

  MispInstance inside = misp(2, 2, {{0, 1}});
  EXPECT_TRUE(check_instance(inside));
}

TEST(Misp, IoRoundTripAndErrors) {
  auto inst = misp(2, 2, {{0, 3}, {1, 2}});
  std::ostringstream out;
  write_misp_instance(out, inst);
  std::istringstream in(out.str());
  auto back = parse_misp_instance(in);
  EXPECT_EQ(back.g, inst.g);
  EXPECT_EQ(back.classes, inst.classes);
  EXPECT_EQ(back.g.edges(), inst.g.edges());

  std::istringstream inside("4 1 2 2\n0 1\n0 1\n2 3\n");
  EXPECT_THROW(parse_misp_instance(inside), ParseError);
  std::istringstream bad_header("4 1 0 2\n");
  EXPECT_THROW(parse_misp_instance(bad_header), ParseError);
}

TEST(IdspGadget, ShapeOfTheConstruction) {
  auto inst = misp(2, 2, {{0, 2}});
  IdspGadget g = misp_to_idsp_gadget(inst);
  EXPECT_EQ(g.k, 2);
  EXPECT_EQ(g.m, 1);
  EXPECT_EQ(g.q, 2);
  EXPECT_EQ(g.target, 4);
  EXPECT_EQ(g.epsilon, Rational(1, 12));
  EXPECT_EQ(g.rep.d(), 4);
  // k q (m+1) W intervals, k (2mq+2) S intervals, m edge intervals.
  EXPECT_EQ(g.graph.n(), 2 * 2 * 2 + 2 * 6 + 1);
  EXPECT_TRUE(verify_representation(g.graph, g.rep).valid);
  for (const auto& row : g.w) {
    for (const auto& copies : row) EXPECT_EQ(copies.size(), 2u);
  }
}

TEST(IdspGadget, YesInstanceReachesTarget) {
  auto inst = misp(2, 2, {{0, 2}});
  IdspGadget g = misp_to_idsp_gadget(inst);
  EXPECT_EQ(min_ids(g.graph), 4);
  auto all = all_minimum_independent_dominating_sets(g.graph, {kMaskCeiling, kMaskCeiling});
  ASSERT_FALSE(all.empty());
  for (const auto& s : all) EXPECT_TRUE(check_w_structure(g, s));
}

TEST(IdspGadget, NoInstanceExceedsTarget) {
  IdspGadget g = misp_to_idsp_gadget(misp(2, 1, {{0, 1}}));
  EXPECT_EQ(g.target, 4);
  EXPECT_GT(min_ids(g.graph), 4);
}

TEST(IdspGadget, WStructureCheck) {
  IdspGadget g = misp_to_idsp_gadget(misp(2, 2, {{0, 2}}));
  std::array<int, 2> tuple{0, 1};  // v^1_1 is an endpoint of the edge
  auto w = w_union(g, tuple);
  EXPECT_EQ(w.size(), 4u);
  EXPECT_TRUE(ref::independent(ref::adjacency(g.graph), [&] {
    ref::Mask m = 0;
    for (Vertex v : w) m |= ref::Mask{1} << v;
    return m;
  }()));
  EXPECT_TRUE(check_w_structure(g, w));
  std::vector<Vertex> missing(w.begin() + 1, w.end());
  EXPECT_FALSE(check_w_structure(g, missing));

  IdspGadget one = misp_to_idsp_gadget(misp(1, 2, {}));
  EXPECT_EQ(one.target, 1);
  EXPECT_EQ(min_ids(one.graph), 1);
  for (const auto& s : all_minimum_independent_dominating_sets(one.graph)) EXPECT_TRUE(check_w_structure(one, s));
}

// With one edge, the W-union of a tuple is an IDS exactly for multicoloured
// independent sets, except when neither chosen vertex is an endpoint of the
// edge: then both chosen W copies over the edge carry its label and overlap.
TEST(IdspGadget, WUnionIsIdsForSolutionsTouchingTheEdge) {
  int overlapping = 0;
  for (const MispInstance& inst : all_misp_instances(2, 2, 1)) {
    IdspGadget g = misp_to_idsp_gadget(inst);
    EXPECT_EQ(min_ids(g.graph), g.target);
    auto [u, v] = inst.g.edges().front();
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        std::array<int, 2> tuple{a, b};
        Vertex x = inst.classes[0][a], y = inst.classes[1][b];
        bool touches = x == u || x == v || y == u || y == v;
        auto w = w_union(g, tuple);
        bool ids = is_independent(g.graph, w) && is_dominating(g.graph, w);
        if (touches) {
          EXPECT_EQ(ids, is_multicolored_independent(inst, tuple));
        } else {
          EXPECT_TRUE(is_multicolored_independent(inst, tuple));
          EXPECT_FALSE(is_independent(g.graph, w));
          ++overlapping;
        }
      }
    }
  }
  EXPECT_EQ(overlapping, 4);
}

// With two edges sharing v^1_1, the two chosen W copies over the second edge
// both carry that edge's label and overlap, so the W-union of the solution
// (v^1_2, v^2_1) is not independent and the minimum IDS is one above target.
TEST(IdspGadget, TwoEdgesSharingAnEndpointMissTheTarget) {
  auto inst = misp(2, 2, {{0, 2}, {0, 3}});
  std::array<int, 2> solution{1, 0};
  ASSERT_TRUE(is_multicolored_independent(inst, solution));
  IdspGadget g = misp_to_idsp_gadget(inst);
  EXPECT_TRUE(verify_representation(g.graph, g.rep).valid);
  EXPECT_EQ(g.target, 6);
  EXPECT_EQ(min_ids(g.graph), 7);
  EXPECT_FALSE(is_independent(g.graph, w_union(g, solution)));
}

// Length-1/q S tiles cannot all be dominated by one W interval per class, so
// the literal tiling misses the target already for a single vertex.
TEST(IdspGadget, LiteralSpacingMissesTheTarget) {
  for (const MispInstance& inst : {misp(1, 1, {}), misp(2, 2, {{0, 2}})}) {
    IdspGadget half = misp_to_idsp_gadget(inst, SSpacing::HalfStep);
    IdspGadget literal = misp_to_idsp_gadget(inst, SSpacing::Literal);
    EXPECT_TRUE(verify_representation(literal.graph, literal.rep).valid);
    EXPECT_EQ(min_ids(half.graph), half.target);
    EXPECT_GT(min_ids(literal.graph), literal.target);
  }
}

#include <gtest/gtest.h>

#include <array>
#include <map>
#include <set>

#include "oracle_support.hpp"
#include "simint/constructors.hpp"
#include "simint/errors.hpp"
#include "simint/fixtures.hpp"
#include "simint/generators.hpp"
#include "simint/params.hpp"

using namespace simint;
namespace ref = testing_oracle;

namespace {

Graph named(Family f, std::initializer_list<int> params) {
  std::vector<int> p(params);
  return make_named_graph(f, p);
}

std::vector<ref::Mask> pattern(const std::vector<Interval>& ivs) {
  int n = static_cast<int>(ivs.size());
  std::vector<ref::Mask> adj(n, 0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && intervals_intersect(ivs[u], ivs[v])) adj[u] |= ref::Mask{1} << v;
    }
  }
  return adj;
}

}  // namespace

TEST(Ecc, Examples) {
  EXPECT_EQ(ecc_exact(named(Family::Complete, {3})).value, 1);
  EXPECT_EQ(ecc_exact(named(Family::Cycle, {4})).value, 4);
  EXPECT_EQ(ecc_exact(Graph(3)).value, 0);
  Graph comatch = named(Family::ComplementOfMatching, {6});
  EccResult r = ecc_exact(comatch);
  EXPECT_FALSE(check_cover(comatch, r.cover));
  EXPECT_EQ(r.value, r.cover.size());
  EXPECT_GE(r.value, si_exact(comatch).value);
}

TEST(Ecc, ExactMatchesReferenceAndGreedyIsNoBetter) {
  Rng rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = random_graph(1 + trial % 7, 0.5, rng);
    EccResult r = ecc_exact(g);
    EXPECT_EQ(r.value, ref::ecc(g));
    EXPECT_FALSE(check_cover(g, r.cover));
    EdgeCliqueCover greedy = ecc_greedy(g);
    EXPECT_FALSE(check_cover(g, greedy));
    EXPECT_GE(greedy.size(), r.value);
  }
}

TEST(Ecc, CapIsEnforced) {
  EXPECT_THROW(ecc_exact(named(Family::Complete, {8})), CapExceeded);
}

TEST(Layouts, CountsAndPatterns) {
  EXPECT_EQ(enumerate_interval_layouts(1).size(), 1u);
  EXPECT_EQ(enumerate_interval_layouts(2).size(), 3u);
  // Layouts are deduplicated up to relabelling, so compare isomorphism classes.
  for (int n = 3; n <= 5; ++n) {
    std::set<std::vector<ref::Mask>> seen, expected;
    for (const auto& layout : enumerate_interval_layouts(n)) {
      seen.insert(ref::canonical_form(pattern(layout.intervals())));
    }
    for (const auto& f : ref::interval_graphs(n)) expected.insert(ref::canonical_form(f));
    EXPECT_EQ(seen, expected) << n;
  }
  EXPECT_EQ(ref::interval_graphs(3).size(), 8u);
  EXPECT_THROW(enumerate_interval_layouts(8), CapExceeded);
}

TEST(SiDecide, Examples) {
  EXPECT_TRUE(si_decide(named(Family::Path, {4}), 1).yes);
  EXPECT_FALSE(si_decide(named(Family::Cycle, {4}), 1).yes);
  SiDecision c4 = si_decide(named(Family::Cycle, {4}), 2);
  ASSERT_TRUE(c4.yes);
  ASSERT_TRUE(c4.witness);
  EXPECT_TRUE(verify_representation(named(Family::Cycle, {4}), *c4.witness).valid);
  Graph k222 = named(Family::Complete3Partite, {2, 2, 2});
  EXPECT_FALSE(si_decide(k222, 3).yes);
  EXPECT_TRUE(si_decide(k222, 4).yes);
}

TEST(SiExact, Examples) {
  EXPECT_EQ(si_exact(Graph(5)).value, 0);
  EXPECT_EQ(si_exact(named(Family::CompleteBipartite, {3, 3})).value, 3);
  EXPECT_EQ(si_exact(named(Family::Path, {5})).value, 1);
  // At least ceil(log2(n - 1)) for the complement of a perfect matching.
  EXPECT_GE(si_exact(named(Family::ComplementOfMatching, {6})).value, 3);
  EXPECT_THROW(si_exact(named(Family::Cycle, {8})), CapExceeded);
}

// si_exact against the layout-times-labelling search in oracle_support.hpp on
// every connected graph with at most 5 vertices. The reference values were
// computed once and frozen here as histograms (graphs per si value).
TEST(SiExact, MatchesReferenceOnAllSmallConnectedGraphs) {
  const std::map<int, std::map<int, int>> frozen{
      {2, {{1, 1}}},
      {3, {{1, 2}}},
      {4, {{1, 5}, {2, 1}}},
      {5, {{1, 15}, {2, 6}}},
  };
  for (int n = 2; n <= 5; ++n) {
    std::map<int, int> histogram;
    for (const Graph& g : connected_graphs(n)) {
      auto expected = ref::si(g, 3);
      ASSERT_TRUE(expected);
      SiResult got = si_exact(g);
      EXPECT_EQ(got.value, *expected);
      EXPECT_EQ(got.witness.d(), got.value);
      EXPECT_TRUE(ref::represents(g, got.witness));
      ++histogram[got.value];
    }
    EXPECT_EQ(histogram, frozen.at(n)) << "n=" << n;
  }
}

TEST(Pathwidth, Examples) {
  EXPECT_EQ(pathwidth_exact(named(Family::Path, {5})).value, 1);
  EXPECT_EQ(pathwidth_exact(named(Family::Cycle, {4})).value, 2);
  EXPECT_EQ(pathwidth_exact(named(Family::Complete, {4})).value, 3);
}

TEST(Pathwidth, MatchesPermutationReference) {
  Rng rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_graph(1 + trial % 7, 0.4, rng);
    PathwidthResult r = pathwidth_exact(g);
    EXPECT_EQ(r.value, ref::pathwidth(g));
    EXPECT_FALSE(check_decomposition(g, r.decomposition));
    EXPECT_EQ(r.decomposition.width(), r.value);
  }
}

TEST(LinearMim, Examples) {
  EXPECT_EQ(linear_mim_exact(named(Family::Path, {5})).value, 1);
  int c4 = linear_mim_exact(named(Family::Cycle, {4})).value;
  EXPECT_GE(c4, 1);
  EXPECT_LE(c4, 2);
  EXPECT_LE(linear_mim_exact(named(Family::CompleteBipartite, {3, 3})).value, 3);
}

TEST(LinearMim, MatchesPermutationReference) {
  Rng rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_graph(2 + trial % 6, 0.45, rng);
    LmimResult r = linear_mim_exact(g);
    EXPECT_EQ(r.value, ref::linear_mim(g));
    EXPECT_TRUE(r.witness.certified());
  }
}

TEST(PathAlpha, Examples) {
  EXPECT_EQ(path_alpha_exact(named(Family::Path, {5})), 1);
  EXPECT_EQ(path_alpha_exact(named(Family::Complete, {4})), 1);
  EXPECT_EQ(path_alpha_exact(named(Family::Cycle, {4})), 2);
  for (int n = 4; n <= 6; n += 2) {
    EXPECT_LE(path_alpha_exact(named(Family::ComplementOfMatching, {n})), 2);
  }
}

TEST(PathAlpha, BoundedBySiOnRandomGraphs) {
  Rng rng(59);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_graph(2 + trial % 5, 0.5, rng);
    if (g.m() == 0) continue;  // edgeless: si is 0 while every bag has alpha 1
    int pa = path_alpha_exact(g);
    EXPECT_LE(pa, si_exact(g).value);
    EXPECT_LE(pa, ref::alpha(g));
  }
}

TEST(ThinnessWitness, Examples) {
  Graph p4 = named(Family::Path, {4});
  SimRep interval(1, {{0, 2}, {1, 3}, {2, 4}, {3, 5}}, std::vector<LabelSet>(4, LabelSet{1}));
  ThinnessWitness one = thinness_witness(p4, interval);
  EXPECT_EQ(one.classes.size(), 1u);
  EXPECT_TRUE(validate_thinness(p4, one));

  Fixture c4 = two_label_c4();
  ThinnessWitness three = thinness_witness(c4.graph, c4.rep);
  EXPECT_EQ(three.classes.size(), 3u);
  EXPECT_TRUE(validate_thinness(c4.graph, three));
}

TEST(ThinnessWitness, ValidatorRejectsBrokenWitnesses) {
  Graph p3 = named(Family::Path, {3});
  // Order 1,0,2 in one class: 1 sees 2 but 0, placed between them, does not.
  ThinnessWitness bad{{{0, 1, 2}}, {1, 0, 2}};
  EXPECT_FALSE(validate_thinness(p3, bad));
}

TEST(ThinnessWitness, RandomRepsStayWithinTwoToTheD) {
  Rng rng(61);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = random_graph(1 + trial % 10, 0.4, rng);
    SimRep rep = construct_from_ecc(g, ecc_greedy(g));
    ThinnessWitness w = thinness_witness(g, rep);
    EXPECT_TRUE(validate_thinness(g, w));
    if (rep.d() < 20) {
      EXPECT_LE(w.classes.size(), std::size_t{1} << rep.d());
    }
  }
}

TEST(LmimWitness, Examples) {
  Graph p4 = named(Family::Path, {4});
  SimRep interval(1, {{0, 2}, {1, 3}, {2, 4}, {3, 5}}, std::vector<LabelSet>(4, LabelSet{1}));
  LmimWitness a = lmim_witness(p4, interval);
  EXPECT_TRUE(a.certified());
  for (int c : a.cut_values) EXPECT_LE(c, 1);

  Fixture c4 = two_label_c4();
  LmimWitness b = lmim_witness(c4.graph, c4.rep);
  EXPECT_TRUE(b.certified());
  EXPECT_EQ(b.bound, 2);

  Graph k33 = named(Family::CompleteBipartite, {3, 3});
  LmimWitness c = lmim_witness(k33, construct_bipartite(k33, *find_bipartition(k33)));
  EXPECT_TRUE(c.certified());
  EXPECT_LE(*std::max_element(c.cut_values.begin(), c.cut_values.end()), 3);
}

TEST(LmimWitness, CutValuesMatchReference) {
  Rng rng(67);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_graph(2 + trial % 9, 0.4, rng);
    SimRep rep = construct_from_ecc(g, ecc_greedy(g));
    LmimWitness w = lmim_witness(g, rep);
    ASSERT_TRUE(w.verified);
    ref::Mask prefix = 0;
    for (std::size_t i = 0; i + 1 < w.order.size(); ++i) {
      prefix |= ref::Mask{1} << w.order[i];
      EXPECT_EQ(w.cut_values[i], ref::cut_mim(g, prefix));
    }
  }
}

TEST(PathDecompositionFromRep, Examples) {
  Graph p4 = named(Family::Path, {4});
  SimRep interval(1, {{0, 2}, {1, 3}, {2, 4}, {3, 5}}, std::vector<LabelSet>(4, LabelSet{1}));
  PathDecomposition a = path_decomposition_from_rep(p4, interval);
  EXPECT_EQ(a.bags, (std::vector<std::vector<Vertex>>{{0, 1}, {1, 2}, {2, 3}}));

  Fixture c4 = two_label_c4();
  PathDecomposition b = path_decomposition_from_rep(c4.graph, c4.rep);
  EXPECT_FALSE(check_decomposition(c4.graph, b));
  for (const auto& bag : b.bags) {
    EXPECT_LE(ref::alpha(induced_subgraph(c4.graph, bag).graph), 2);
  }

  ConstructedRep k222 = construct_3partite(2, 2, 2);
  PathDecomposition c = path_decomposition_from_rep(k222.graph, k222.rep);
  EXPECT_FALSE(check_decomposition(k222.graph, c));
  for (const auto& bag : c.bags) {
    EXPECT_LE(bag.size(), 8u);
    EXPECT_LE(ref::alpha(induced_subgraph(k222.graph, bag).graph), 4);
  }
}

TEST(PathDecompositionFromRep, RightEndpointOrderSortsByRightEnd) {
  Fixture c4 = two_label_c4();
  auto order = right_endpoint_order(c4.rep);
  for (std::size_t i = 1; i < order.size(); ++i) {
    EXPECT_LE(c4.rep.interval(order[i - 1]).r, c4.rep.interval(order[i]).r);
  }
}

#include <gtest/gtest.h>

#include <array>
#include <random>

#include "oracle_support.hpp"
#include "simint/errors.hpp"
#include "simint/generators.hpp"
#include "simint/graph.hpp"
#include "simint/oracles.hpp"
#include "simint/rational.hpp"

using namespace simint;
namespace ref = testing_oracle;

namespace {

Graph named(Family f, std::initializer_list<int> params) {
  std::vector<int> p(params);
  return make_named_graph(f, p);
}

}  // namespace

TEST(Rational, ParsesAndPrintsReducedFractions) {
  EXPECT_EQ(parse_rational("2/4"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-3/4"), Rational(-3, 4));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(to_string(Rational(6, 4)), "3/2");
  EXPECT_EQ(to_string(Rational(-2)), "-2");
  EXPECT_THROW(parse_rational("1/0"), std::exception);
  EXPECT_THROW(parse_rational("x"), std::exception);
}

TEST(GraphParse, ReadsEdgeLists) {
  Graph p3 = parse_graph_string("3 2\n0 1\n1 2");
  EXPECT_EQ(p3.n(), 3);
  EXPECT_EQ(p3.m(), 2);
  EXPECT_TRUE(p3.adjacent(0, 1));
  EXPECT_TRUE(p3.adjacent(2, 1));
  EXPECT_FALSE(p3.adjacent(0, 2));

  Graph empty = parse_graph_string("2 0");
  EXPECT_EQ(empty.n(), 2);
  EXPECT_EQ(empty.m(), 0);

  Graph tri = parse_graph_string("# comment\n3 3\n0 1\n1 2\n0 2\n");
  EXPECT_EQ(tri.m(), 3);
  EXPECT_TRUE(is_clique(tri, std::vector<Vertex>{0, 1, 2}));
}

TEST(GraphParse, RejectsMalformedInput) {
  EXPECT_THROW(parse_graph_string(""), ParseError);
  EXPECT_THROW(parse_graph_string("3 1\n0 3"), ParseError);
  EXPECT_THROW(parse_graph_string("3 2\n0 1\n0 1"), ParseError);
  EXPECT_THROW(parse_graph_string("3 1\n1 1"), ParseError);
  EXPECT_THROW(parse_graph_string("3 1\n0 1\n1 2"), ParseError);
  EXPECT_THROW(parse_graph_string("3 2\n0 1"), ParseError);
  EXPECT_THROW(parse_graph_string("2 5"), ParseError);
  try {
    parse_graph_string("3 2\n0 1\nzz");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
}

TEST(GraphParse, WriteThenParseIsIdentity) {
  Rng rng(7);
  for (int i = 0; i < 20; ++i) {
    Graph g = random_graph(8, 0.4, rng);
    std::ostringstream out;
    write_graph(out, g);
    EXPECT_EQ(parse_graph_string(out.str()), g);
  }
}

TEST(InducedSubgraph, Examples) {
  Graph tri = named(Family::Complete, {3});
  auto s = induced_subgraph(tri, std::vector<Vertex>{0, 1});
  EXPECT_EQ(s.graph.n(), 2);
  EXPECT_EQ(s.graph.m(), 1);

  Graph c4 = named(Family::Cycle, {4});
  EXPECT_EQ(induced_subgraph(c4, std::vector<Vertex>{0, 1, 2, 3}).graph, c4);

  Graph c5 = named(Family::Cycle, {5});
  auto part = induced_subgraph(c5, std::vector<Vertex>{0, 2, 4});
  EXPECT_EQ(part.graph.m(), 1);
  EXPECT_TRUE(part.graph.adjacent(0, 2));  // old 0 and 4
  EXPECT_EQ(part.original, (std::vector<Vertex>{0, 2, 4}));
}

TEST(NamedGraphs, Examples) {
  Graph comatch = named(Family::ComplementOfMatching, {4});
  EXPECT_EQ(comatch.m(), 4);
  for (int v = 0; v < 4; ++v) EXPECT_EQ(comatch.degree(v), 2);
  EXPECT_TRUE(is_connected(comatch));

  Graph k222 = named(Family::Complete3Partite, {2, 2, 2});
  EXPECT_EQ(k222.n(), 6);
  EXPECT_EQ(k222.m(), 12);

  Graph k33 = named(Family::CompleteBipartite, {3, 3});
  EXPECT_EQ(k33.m(), 9);
  EXPECT_FALSE(k33.adjacent(0, 1));
  EXPECT_TRUE(k33.adjacent(0, 3));

  EXPECT_EQ(named(Family::Star, {4}).n(), 5);
  EXPECT_EQ(named(Family::Edgeless, {3}).m(), 0);
  EXPECT_THROW(named(Family::Cycle, {2}), std::invalid_argument);
}

TEST(Digraph, TopologicalOrderDetectsCycles) {
  Digraph d(3);
  d.add_arc(0, 1);
  d.add_arc(1, 2);
  auto order = topological_order(d);
  ASSERT_TRUE(order);
  EXPECT_EQ(*order, (std::vector<Vertex>{0, 1, 2}));
  d.add_arc(2, 0);
  EXPECT_FALSE(topological_order(d));
  EXPECT_EQ(d.in_degree(0), 1);
  EXPECT_EQ(d.out_degree(0), 1);
}

TEST(BruteForce, Examples) {
  EXPECT_EQ(brute_force(Problem::MaxIndependentSet, named(Family::Cycle, {5})).value, 2);
  EXPECT_EQ(brute_force(Problem::MinDominatingSet, named(Family::Star, {4})).value, 1);
  EXPECT_EQ(brute_force(Problem::ChromaticNumber, named(Family::Complete, {3})).value, 3);
  EXPECT_EQ(brute_force(Problem::MaxInducedMatching, named(Family::Path, {6})).value, 2);
  EXPECT_EQ(brute_force(Problem::CliqueNumber, named(Family::Cycle, {5})).value, 2);
  EXPECT_EQ(brute_force(Problem::MinIndependentDominatingSet, named(Family::Path, {4})).value, 2);
}

TEST(BruteForce, CapsAreEnforced) {
  Graph big(20);
  EXPECT_THROW(brute_force(Problem::MaxIndependentSet, big), CapExceeded);
  OracleCaps caps;
  caps.subset = 20;
  EXPECT_EQ(brute_force(Problem::MaxIndependentSet, big, caps).value, 20);
}

// Every oracle witness is checked, and every value is compared with the
// reference subset searches in oracle_support.hpp.
TEST(BruteForce, AgreesWithReferenceOnRandomGraphs) {
  Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + trial % 8;
    Graph g = random_graph(n, 0.2 + 0.1 * (trial % 6), rng);
    auto mis = brute_force(Problem::MaxIndependentSet, g);
    EXPECT_EQ(mis.value, ref::alpha(g));
    EXPECT_TRUE(is_independent(g, mis.vertices));

    auto ds = brute_force(Problem::MinDominatingSet, g);
    EXPECT_EQ(ds.value, ref::gamma(g));
    EXPECT_TRUE(is_dominating(g, ds.vertices));

    auto ids = brute_force(Problem::MinIndependentDominatingSet, g);
    EXPECT_EQ(ids.value, ref::independent_domination(g));

    auto chi = brute_force(Problem::ChromaticNumber, g);
    EXPECT_TRUE(is_proper_coloring(g, chi.coloring));

    auto mim = brute_force(Problem::MaxInducedMatching, g);
    EXPECT_TRUE(is_induced_matching(g, mim.edges));
    EXPECT_EQ(static_cast<int>(mim.edges.size()), mim.value);

    // Independence in g is a clique in the complement.
    EXPECT_EQ(mis.value, brute_force(Problem::CliqueNumber, complement(g)).value);
  }
}

TEST(BruteForce, MaximalCliquesMatchReference) {
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_graph(1 + trial % 9, 0.5, rng);
    auto got = maximal_cliques_bruteforce(g);
    std::set<std::vector<int>> as_set(got.begin(), got.end());
    EXPECT_EQ(as_set, ref::maximal_cliques(g));
  }
}

TEST(BruteForce, AllMinimumIdsAreMinimumAndIndependentDominating) {
  Graph c6 = make_named_graph(Family::Cycle, std::array{6});
  auto all = all_minimum_independent_dominating_sets(c6);
  // C6 has IDS number 2: the three antipodal pairs.
  ASSERT_EQ(all.size(), 3u);
  for (const auto& s : all) {
    EXPECT_EQ(s.size(), 2u);
    EXPECT_TRUE(is_independent(c6, s));
    EXPECT_TRUE(is_dominating(c6, s));
  }
}

TEST(Generators, ConnectedGraphCountsMatchKnownSequence) {
  // Connected unlabelled graphs: 1, 1, 2, 6, 21, 112.
  const std::array<std::size_t, 6> expected{1, 1, 2, 6, 21, 112};
  for (int n = 1; n <= 6; ++n) {
    auto gs = connected_graphs(n);
    EXPECT_EQ(gs.size(), expected[n - 1]) << "n=" << n;
    for (const auto& g : gs) EXPECT_TRUE(is_connected(g));
  }
}

#include "simint/fixtures.hpp"

#include "simint/constructors.hpp"
#include "simint/params.hpp"

namespace simint {

Fixture two_label_c4() {
  // Cycle 0-1-2-3-0: 0 and 2 carry {1,2}, 1 carries {1}, 3 carries {2}.
  Graph g = Graph::from_edges(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  std::vector<Interval> iv{{Rational(-3, 4), Rational(1, 4)},
                           {Rational(0), Rational(1)},
                           {Rational(3, 4), Rational(7, 4)},
                           {Rational(0), Rational(1)}};
  std::vector<LabelSet> labels{{1, 2}, {1}, {1, 2}, {2}};
  return {"two-label-c4", std::move(g), SimRep(2, std::move(iv), std::move(labels))};
}

Fixture subdivided_claw() {
  Graph g = Graph::from_edges(7, std::vector<Edge>{{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
  std::vector<Interval> iv{{Rational(0), Rational(3)},          {Rational(1), Rational(2)},
                           {Rational(1), Rational(2)},          {Rational(-1, 2), Rational(1, 2)},
                           {Rational(-5, 4), Rational(-1, 4)},  {Rational(5, 2), Rational(7, 2)},
                           {Rational(13, 4), Rational(17, 4)}};
  std::vector<LabelSet> labels{{1}, {1, 2}, {2}, {1}, {1}, {1}, {1}};
  return {"subdivided-claw", std::move(g), SimRep(2, std::move(iv), std::move(labels))};
}

std::vector<Fixture> standard_fixtures() {
  std::vector<Fixture> out{two_label_c4(), subdivided_claw()};
  for (int n : {4, 5, 6, 8}) {
    auto c = construct_cycle(n);
    out.push_back({"cycle-" + std::to_string(n), std::move(c.graph), std::move(c.rep)});
  }
  auto named = [](Family f, std::vector<int> sizes) { return make_named_graph(f, sizes); };
  for (auto [a, b] : {std::pair{2, 2}, {2, 3}, {3, 3}, {1, 4}}) {
    Graph g = named(Family::CompleteBipartite, {a, b});
    SimRep rep = construct_bipartite(g, *find_bipartition(g));
    out.push_back({"bipartite-" + std::to_string(a) + "-" + std::to_string(b), std::move(g), std::move(rep)});
  }
  for (int s : {1, 2, 3}) {
    auto t = construct_3partite(s, s, s);
    out.push_back({"3partite-" + std::to_string(s), std::move(t.graph), std::move(t.rep)});
  }
  {
    Graph g = named(Family::Complete, {3});
    SimRep rep = construct_from_edges(g);
    out.push_back({"triangle-edges", std::move(g), std::move(rep)});
  }
  {
    Graph g = named(Family::Path, {5});
    SimRep rep = construct_from_edges(g);
    out.push_back({"path-5-edges", std::move(g), std::move(rep)});
  }
  for (int n : {4, 6}) {
    Graph g = named(Family::ComplementOfMatching, {n});
    SimRep rep = construct_from_ecc(g, ecc_exact(g).cover);
    out.push_back({"comatch-" + std::to_string(n) + "-ecc", std::move(g), std::move(rep)});
  }
  {
    Graph g = named(Family::Path, {4});
    SimRep rep = construct_from_path_decomposition(g, {{{0, 1}, {1, 2}, {2, 3}}});
    out.push_back({"path-4-pathdecomp", std::move(g), std::move(rep)});
  }
  {
    Graph g = named(Family::Cycle, {4});
    SimRep rep = construct_from_path_decomposition(g, {{{0, 1, 3}, {1, 2, 3}}});
    out.push_back({"cycle-4-pathdecomp", std::move(g), std::move(rep)});
  }
  {
    Graph g = named(Family::Complete, {3});
    SimRep rep = construct_from_path_decomposition(g, {{{0, 1, 2}}});
    out.push_back({"triangle-pathdecomp", std::move(g), std::move(rep)});
  }
  {
    Graph g = named(Family::Cycle, {7});
    SimRep rep = construct_from_path_decomposition(g, pathwidth_exact(g).decomposition);
    out.push_back({"cycle-7-pathdecomp", std::move(g), std::move(rep)});
  }
  return out;
}

}  // namespace simint

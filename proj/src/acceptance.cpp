#include "simint/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>
#include <utility>

#include "simint/constructors.hpp"
#include "simint/errors.hpp"
#include "simint/fixtures.hpp"
#include "simint/generators.hpp"
#include "simint/oracles.hpp"
#include "simint/params.hpp"
#include "simint/reductions.hpp"
#include "simint/rep_io.hpp"
#include "simint/simrep.hpp"
#include "simint/solvers.hpp"

namespace simint {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Counts checks and failures; the first few failure messages are logged.
class Tally {
 public:
  explicit Tally(std::ostream& log) : log_(log) {}

  void check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    if (++failures_ <= 5) log_ << "    failure: " << what << '\n';
  }
  long long checks() const { return checks_; }
  long long failures() const { return failures_; }

 private:
  std::ostream& log_;
  long long checks_ = 0;
  long long failures_ = 0;
};

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string graph_name(const Graph& g) {
  std::ostringstream s;
  s << "n=" << g.n() << " edges=";
  const char* sep = "";
  for (auto [u, v] : g.edges()) s << std::exchange(sep, ",") << u << '-' << v;
  return s.str();
}

OracleCaps wide_caps() {
  OracleCaps caps;
  caps.subset = kMaskCeiling;
  caps.small = kMaskCeiling;
  return caps;
}

bool valid(const Graph& g, const SimRep& rep) { return verify_representation(g, rep).valid; }

bool has_isolated_vertex(const Graph& g) {
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.degree(v) == 0) return true;
  }
  return false;
}

// 2^e, saturating at 2^62.
long long pow2(long long e) { return e >= 62 ? (1LL << 62) : (1LL << e); }

// Decomposition read off a vertex order: bag i is {order[i]} plus the earlier
// vertices that still have a neighbour at or after position i.
PathDecomposition order_decomposition(const Graph& g, const std::vector<Vertex>& order) {
  PathDecomposition pd;
  std::vector<int> pos(g.n());
  for (int i = 0; i < g.n(); ++i) pos[order[i]] = i;
  for (int i = 0; i < g.n(); ++i) {
    std::vector<Vertex> bag{order[i]};
    for (int j = 0; j < i; ++j) {
      Vertex u = order[j];
      bool reaches = false;
      for (Vertex w : to_vector(g.neighbors(u))) reaches = reaches || pos[w] >= i;
      if (reaches) bag.push_back(u);
    }
    std::sort(bag.begin(), bag.end());
    pd.bags.push_back(std::move(bag));
  }
  return pd;
}

Outcome criterion_named_si(const ParamCaps& caps, std::ostream& log) {
  struct Case {
    std::string name;
    Graph g;
    int expected;
  };
  std::vector<Case> cases;
  auto named = [](Family f, std::vector<int> sizes) { return make_named_graph(f, sizes); };
  for (int n = 1; n <= 7; ++n) cases.push_back({"edgeless-" + std::to_string(n), named(Family::Edgeless, {n}), 0});
  for (int k = 2; k <= 7; ++k) cases.push_back({"P" + std::to_string(k), named(Family::Path, {k}), 1});
  for (int n = 4; n <= 7; ++n) cases.push_back({"C" + std::to_string(n), named(Family::Cycle, {n}), 2});
  cases.push_back({"K2,2", named(Family::CompleteBipartite, {2, 2}), 2});
  cases.push_back({"K3,3", named(Family::CompleteBipartite, {3, 3}), 3});
  cases.push_back({"K2,2,2", named(Family::Complete3Partite, {2, 2, 2}), 4});

  Tally t(log);
  double slowest = 0;
  for (const auto& c : cases) {
    auto t0 = Clock::now();
    SiResult r = si_exact(c.g, caps);
    double s = since(t0);
    slowest = std::max(slowest, s);
    t.check(r.value == c.expected,
            c.name + ": si=" + std::to_string(r.value) + ", expected " + std::to_string(c.expected));
    t.check(r.witness.d() == r.value && valid(c.g, r.witness), c.name + ": witness does not verify");
    t.check(s < 60.0, c.name + " took " + std::to_string(s) + "s (limit 60s)");
  }
  std::ostringstream d;
  d << cases.size() << " graphs, " << t.failures() << " mismatches, slowest " << slowest << "s";
  return {t.failures() == 0, d.str()};
}

Outcome criterion_comatch_cliques(std::ostream& log) {
  Tally t(log);
  std::ostringstream d;
  for (int n : {4, 6, 8}) {
    std::vector<int> size{n};
    Graph g = make_named_graph(Family::ComplementOfMatching, size);
    EccResult cover = ecc_exact(g);
    SimRep rep = construct_from_ecc(g, cover.cover);
    auto cliques = enumerate_maximal_cliques(g, rep).cliques;
    std::size_t expected = std::size_t{1} << (n / 2);
    t.check(cliques.size() == expected, "n=" + std::to_string(n) + ": " + std::to_string(cliques.size()) +
                                            " maximal cliques, expected " + std::to_string(expected));
    t.check(within_clique_bound(cliques.size(), rep.d(), n), "n=" + std::to_string(n) + ": above 2^(2^d)*n");
    auto reference = maximal_cliques_bruteforce(g);
    t.check(cliques == reference, "n=" + std::to_string(n) + ": differs from brute-force enumeration");
    d << "n=" << n << ":" << cliques.size() << "(d=" << rep.d() << ") ";
  }
  return {t.failures() == 0, d.str() + "all equal 2^(n/2)"};
}

Outcome criterion_inequalities(const ParamCaps& caps, std::ostream& log) {
  Tally t(log);
  int graphs = 0;
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      ++graphs;
      std::string name = graph_name(g);
      int si = si_exact(g, caps).value;
      int lmim = linear_mim_exact(g, caps).value;
      int ecc = ecc_exact(g).value;
      int palpha = path_alpha_exact(g, caps);
      int pw = pathwidth_exact(g).value;
      int omega = brute_force(Problem::CliqueNumber, g).value;
      t.check(lmim <= si, name + ": lmim " + std::to_string(lmim) + " > si " + std::to_string(si));
      t.check(si <= ecc, name + ": si " + std::to_string(si) + " > ecc " + std::to_string(ecc));
      t.check(ecc <= g.m(), name + ": ecc > m");
      t.check(palpha <= si, name + ": path-alpha " + std::to_string(palpha) + " > si " + std::to_string(si));
      t.check(pw <= si * omega - 1, name + ": pw " + std::to_string(pw) + " > si*omega-1");
      t.check(si <= pw * pw + pw, name + ": si " + std::to_string(si) + " > pw^2+pw");
      if (auto sides = find_bipartition(g)) {
        auto smaller = std::min(sides->x.size(), sides->y.size());
        t.check(si <= static_cast<int>(smaller), name + ": si above the smaller side");
      }
    }
  }
  std::ostringstream d;
  d << graphs << " non-isomorphic connected graphs (2<=n<=6), " << t.failures() << " violations";
  return {t.failures() == 0, d.str()};
}

Outcome criterion_fpt_oracles(std::uint64_t seed, std::ostream& log) {
  Tally t(log);
  Rng rng(seed);
  const double densities[] = {0.15, 0.3, 0.5, 0.7};
  double worst_leaf_ratio = 0;
  for (int i = 0; i < 200; ++i) {
    int n = 1 + static_cast<int>(rng() % 10);
    Graph g = random_graph(n, densities[rng() % 4], rng);
    SimRep rep = construct_from_ecc(g, ecc_greedy(g));
    int d = rep.d();
    int alpha = brute_force(Problem::MaxIndependentSet, g).value;
    int gamma = brute_force(Problem::MinDominatingSet, g).value;
    std::string name = "graph " + std::to_string(i) + " (" + graph_name(g) + ")";
    for (int k = 0; k <= n; ++k) {
      std::string at = name + " k=" + std::to_string(k);
      SearchResult is = independent_set_fpt(g, rep, k);
      t.check(is.yes == (alpha >= k), at + ": IS answer disagrees with brute force");
      if (is.yes) {
        t.check(static_cast<int>(is.witness.size()) == k && is_independent(g, is.witness), at + ": bad IS witness");
      }
      SearchResult ds = dominating_set_fpt(g, rep, k);
      t.check(ds.yes == (gamma <= k), at + ": DS answer disagrees with brute force");
      if (ds.yes) {
        t.check(static_cast<int>(ds.witness.size()) <= k && is_dominating(g, ds.witness), at + ": bad DS witness");
      }
      long long kd = static_cast<long long>(k) * d;
      for (const SearchResult* r : {&is, &ds}) {
        t.check(within_search_bound(r->leaves, k, d), at + ": " + std::to_string(r->leaves) + " leaves > 2^(kd)");
        t.check(kd >= 60 || r->nodes <= (k + 1) * pow2(kd), at + ": nodes above (k+1)*2^(kd)");
        if (kd < 62) worst_leaf_ratio = std::max(worst_leaf_ratio, static_cast<double>(r->leaves) / pow2(kd));
      }
    }
  }
  std::ostringstream d;
  d << "200 graphs, seed " << seed << ", " << t.checks() << " checks, " << t.failures()
    << " mismatches, max leaves/2^(kd) = " << worst_leaf_ratio;
  return {t.failures() == 0, d.str()};
}

Outcome criterion_constructors(std::uint64_t seed, std::ostream& log) {
  Tally t(log);
  int fixtures = 0, random_inputs = 0;
  for (const Fixture& f : standard_fixtures()) {
    ++fixtures;
    t.check(valid(f.graph, f.rep), f.name + ": does not verify");
  }
  for (int n = 4; n <= 30; ++n) {
    auto c = construct_cycle(n);
    ++fixtures;
    t.check(valid(c.graph, c.rep) && c.rep.d() == 2, "cycle " + std::to_string(n));
  }
  for (int s = 1; s <= 4; ++s) {
    auto c = construct_3partite(s, s, s);
    ++fixtures;
    t.check(valid(c.graph, c.rep) && c.rep.d() == s * s, "3partite " + std::to_string(s));
  }

  Rng rng(seed);
  for (int i = 0; i < 100; ++i) {
    int n = 1 + static_cast<int>(rng() % 9);
    Graph g = random_graph(n, 0.2 + 0.1 * static_cast<double>(rng() % 6), rng);
    std::string name = "random " + std::to_string(i) + " (" + graph_name(g) + ")";
    ++random_inputs;
    SimRep by_edges = construct_from_edges(g);
    t.check(valid(g, by_edges) && by_edges.d() == g.m(), name + ": construct_from_edges");
    EdgeCliqueCover greedy = ecc_greedy(g);
    SimRep by_greedy = construct_from_ecc(g, greedy);
    t.check(valid(g, by_greedy) && by_greedy.d() == greedy.size(), name + ": construct_from_ecc (greedy)");
    if (g.m() <= ParamCaps{}.ecc_edges) {
      EccResult exact = ecc_exact(g);
      t.check(valid(g, construct_from_ecc(g, exact.cover)), name + ": construct_from_ecc (exact)");
    }

    PathwidthResult pw = pathwidth_exact(g);
    SimRep by_pw = construct_from_path_decomposition(g, pw.decomposition);
    int k = pw.value + 1;
    t.check(valid(g, by_pw) && by_pw.d() <= k * (k - 1), name + ": construct_from_path_decomposition (exact)");
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    PathDecomposition loose = order_decomposition(g, order);
    int kl = loose.width() + 1;
    SimRep by_order = construct_from_path_decomposition(g, loose);
    t.check(valid(g, by_order) && by_order.d() <= kl * (kl - 1),
            name + ": construct_from_path_decomposition (random order)");
  }
  for (int i = 0; i < 100; ++i) {
    int a = 1 + static_cast<int>(rng() % 5), b = 1 + static_cast<int>(rng() % 5);
    Graph g(a + b);
    std::bernoulli_distribution coin(0.6);
    for (int x = 0; x < a; ++x) {
      for (int y = a; y < a + b; ++y) {
        if (coin(rng)) g.add_edge(x, y);
      }
    }
    Bipartition sides;
    for (int x = 0; x < a; ++x) sides.x.push_back(x);
    for (int y = a; y < a + b; ++y) sides.y.push_back(y);
    ++random_inputs;
    SimRep rep = construct_bipartite(g, sides);
    t.check(valid(g, rep) && rep.d() == std::min(a, b), "random bipartite " + std::to_string(i));
  }
  std::ostringstream d;
  d << fixtures << " fixtures, " << random_inputs << " random inputs (seed " << seed << "), " << t.checks()
    << " checks, " << t.failures() << " failures";
  return {t.failures() == 0, d.str()};
}

Outcome criterion_witnesses(std::uint64_t seed, std::ostream& log) {
  Tally t(log);
  std::vector<Fixture> cases;
  for (Fixture& f : standard_fixtures()) {
    // Bounds need d >= 1 and no empty label sets, i.e. no isolated vertex.
    if (f.rep.d() >= 1 && f.graph.n() <= 12 && !has_isolated_vertex(f.graph)) cases.push_back(std::move(f));
  }
  Rng rng(seed);
  while (cases.size() < 100) {
    int n = 2 + static_cast<int>(rng() % 11);
    Graph g = random_graph(n, 0.25 + 0.1 * static_cast<double>(rng() % 5), rng);
    if (has_isolated_vertex(g)) continue;
    std::string name = "random " + std::to_string(cases.size()) + " (" + graph_name(g) + ")";
    if (rng() % 2 == 0) {
      cases.push_back({name + " ecc", g, construct_from_ecc(g, ecc_greedy(g))});
    } else {
      ParamCaps caps;
      caps.pathwidth_vertices = 12;
      cases.push_back(
          {name + " pathdecomp", g, construct_from_path_decomposition(g, pathwidth_exact(g, caps).decomposition)});
    }
  }
  for (const Fixture& f : cases) {
    int d = f.rep.d();
    ThinnessWitness thin = thinness_witness(f.graph, f.rep);
    t.check(validate_thinness(f.graph, thin), f.name + ": thinness witness invalid");
    t.check(d >= 62 || static_cast<long long>(thin.classes.size()) <= pow2(d), f.name + ": more than 2^d classes");
    LmimWitness lm = lmim_witness(f.graph, f.rep);
    t.check(lm.certified(), f.name + ": lmim witness not certified within d");
    PathDecomposition pd = path_decomposition_from_rep(f.graph, f.rep);
    t.check(!check_decomposition(f.graph, pd), f.name + ": decomposition invalid");
    int omega = brute_force(Problem::CliqueNumber, f.graph).value;
    for (const auto& bag : pd.bags) {
      int alpha = brute_force(Problem::MaxIndependentSet, induced_subgraph(f.graph, bag).graph).value;
      t.check(alpha <= d, f.name + ": bag independence number above d");
      t.check(static_cast<int>(bag.size()) <= d * omega, f.name + ": bag larger than d*omega");
    }
  }
  std::ostringstream d;
  d << cases.size() << " representations (seed " << seed << "), " << t.checks() << " checks, " << t.failures()
    << " failures";
  return {t.failures() == 0, d.str()};
}

DisjointPathsInstance dp_from_arcs(int n, std::vector<Arc> g, std::vector<Arc> h) {
  DisjointPathsInstance inst{Digraph(n), Digraph(n)};
  for (Arc a : g) inst.g.add_arc(a.tail, a.head);
  for (Arc a : h) inst.h.add_arc(a.tail, a.head);
  return inst;
}

DisjointPathsInstance competing_demands() {
  return dp_from_arcs(7, {{3, 0}, {5, 3}, {2, 1}, {6, 3}, {4, 2}, {2, 0}, {6, 1}, {0, 1}, {4, 3}},
                      {{1, 3}, {3, 5}, {1, 2}, {3, 6}, {1, 4}, {0, 6}, {3, 4}});
}

Outcome criterion_coloring_gadget(std::uint64_t seed, std::ostream& log) {
  Tally t(log);
  std::vector<DisjointPathsInstance> instances;
  // Directed path 0->1->2 closed by (2,0).
  instances.push_back(dp_from_arcs(3, {{0, 1}, {1, 2}}, {{2, 0}}));
  // Every demand has a path on its own, but no arc-disjoint choice serves all of them.
  instances.push_back(competing_demands());
  Rng rng(seed);
  while (instances.size() < 200) {
    int n = 3 + static_cast<int>(rng() % 4);
    if (auto inst = random_dp_instance(n, 12, rng)) instances.push_back(std::move(*inst));
  }
  int applicable = 0, yes = 0, no = 0, forward = 0;
  OracleCaps caps = wide_caps();
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& inst = instances[i];
    std::string name = "instance " + std::to_string(i);
    bool answer = solve_disjoint_paths(inst, 12).yes;
    Preprocessed pre = preprocess_degree_one(inst);
    bool strictly = std::adjacent_find(pre.xi_trace.begin(), pre.xi_trace.end(), std::less_equal<int>()) ==
                    pre.xi_trace.end();
    t.check(strictly && pre.xi_trace.back() == 0, name + ": xi does not fall strictly to 0");
    t.check(!check_instance(pre.instance), name + ": preprocessing broke the instance invariants");
    t.check(solve_disjoint_paths(pre.instance, 64).yes == answer, name + ": preprocessing changed the answer");
    ColoringGadget gadget;
    try {
      gadget = coloring_gadget(pre.instance);
    } catch (const std::invalid_argument&) {
      // An H-arc pointing forward in the topological order has no path at all.
      ++forward;
      t.check(!answer, name + ": forward H-arc on a yes-instance");
      continue;
    }
    ++applicable;
    (answer ? yes : no) += 1;
    t.check(gadget.rep.d() == 2 && valid(gadget.graph, gadget.rep), name + ": gadget does not verify");
    int chi = brute_force(Problem::ChromaticNumber, gadget.graph, caps).value;
    t.check((chi == gadget.k) == answer, name + ": chi=" + std::to_string(chi) + " k=" + std::to_string(gadget.k) +
                                             " but oracle says " + (answer ? "yes" : "no"));
  }
  t.check(applicable >= 20 && yes > 0 && no > 0, "too few decided instances of each answer");
  std::ostringstream d;
  d << applicable << " gadget instances (" << yes << " yes, " << no << " no; seed " << seed << "), " << forward
    << " rejected as forward-arc no-instances, " << t.failures() << " mismatches";
  return {t.failures() == 0, d.str()};
}

Outcome criterion_idsp_gadget(std::ostream& log) {
  Tally t(log);
  OracleCaps caps = wide_caps();
  int instances = 0, yes_count = 0, value_mismatch = 0, structure_fail = 0, tuple_fail = 0;
  for (int k = 1; k <= 2; ++k) {
    for (int q = 1; q <= 2; ++q) {
      for (int m = 0; m <= 2; ++m) {
        for (const MispInstance& inst : all_misp_instances(k, q, m)) {
          ++instances;
          std::ostringstream nm;
          nm << "k=" << k << " q=" << q << " m=" << m << " edges=";
          const char* sep = "";
          for (auto [u, v] : inst.g.edges()) nm << std::exchange(sep, ",") << u << '-' << v;
          std::string name = nm.str();
          IdspGadget gadget = misp_to_idsp_gadget(inst);
          t.check(valid(gadget.graph, gadget.rep) && gadget.rep.d() == k + 2, name + ": gadget does not verify");
          t.check(gadget.graph.n() == k * q * (m + 1) + k * (2 * m * q + 2) + m, name + ": wrong gadget size");
          bool yes = solve_misp(inst).has_value();
          yes_count += yes;
          int ids = brute_force(Problem::MinIndependentDominatingSet, gadget.graph, caps).value;
          bool equal = ids == gadget.target;
          if (equal != yes) ++value_mismatch;
          t.check(equal == yes, name + ": min IDS " + std::to_string(ids) + ", target " +
                                    std::to_string(gadget.target) + ", MISP " + (yes ? "yes" : "no"));
          for (const auto& s : all_minimum_independent_dominating_sets(gadget.graph, caps)) {
            bool ok = check_w_structure(gadget, s);
            if (!ok) ++structure_fail;
            t.check(ok, name + ": a minimum IDS contains no full W-union");
          }
          // Per index tuple: W-union is an IDS exactly for multicoloured independent sets.
          std::vector<int> tuple(k, 0);
          for (;;) {
            auto w = w_union(gadget, tuple);
            bool is_ids = is_independent(gadget.graph, w) && is_dominating(gadget.graph, w);
            if (is_ids != is_multicolored_independent(inst, tuple)) ++tuple_fail;
            int i = k - 1;
            while (i >= 0 && ++tuple[i] == q) tuple[i--] = 0;
            if (i < 0) break;
          }
        }
      }
    }
  }
  std::ostringstream d;
  d << instances << " instances (" << yes_count << " yes), " << value_mismatch << " value mismatches, "
    << structure_fail << " minimum IDS without W-union, " << tuple_fail << " index tuples where W-union IDS != MIS";
  return {t.failures() == 0, d.str()};
}

Outcome criterion_determinism(std::ostream& log) {
  Tally t(log);
  std::vector<Fixture> cases = standard_fixtures();
  {
    MispInstance inst = all_misp_instances(2, 2, 1).front();
    IdspGadget gadget = misp_to_idsp_gadget(inst);
    cases.push_back({"idsp-gadget", gadget.graph, gadget.rep});
    ColoringGadget col = coloring_gadget(dp_from_arcs(3, {{0, 1}, {1, 2}}, {{2, 0}}));
    cases.push_back({"coloring-gadget", col.graph, col.rep});
  }
  for (const Fixture& f : cases) {
    SimRep canon = canonicalize(f.rep);
    t.check(canonicalize(canon) == canon, f.name + ": canonicalize not idempotent");
    t.check(valid(f.graph, canon) == valid(f.graph, f.rep), f.name + ": canonicalize changed verification");
    std::string text = write_rep_string(f.graph, f.rep);
    RepDocument doc = read_rep_string(text);
    t.check(doc.graph == f.graph && doc.rep == f.rep, f.name + ": read(write(x)) != x");
    t.check(write_rep_string(doc.graph, doc.rep) == text, f.name + ": write(read(text)) != text");

    std::vector<int> perm(f.rep.d());
    std::iota(perm.rbegin(), perm.rend(), 1);
    SimRep renamed = rename_labels(f.rep, perm);
    auto cliques = enumerate_maximal_cliques(f.graph, f.rep).cliques;
    for (const SimRep* other : {&canon, &renamed}) {
      t.check(enumerate_maximal_cliques(f.graph, *other).cliques == cliques, f.name + ": clique list changed");
      for (int k = 0; k <= std::min(f.graph.n(), 5); ++k) {
        auto a = independent_set_fpt(f.graph, f.rep, k), b = independent_set_fpt(f.graph, *other, k);
        t.check(a.yes == b.yes, f.name + ": IS answer changed at k=" + std::to_string(k));
        auto c = dominating_set_fpt(f.graph, f.rep, k), e = dominating_set_fpt(f.graph, *other, k);
        t.check(c.yes == e.yes, f.name + ": DS answer changed at k=" + std::to_string(k));
      }
    }
  }
  std::ostringstream d;
  d << cases.size() << " fixtures, " << t.checks() << " checks, " << t.failures() << " failures";
  return {t.failures() == 0, d.str()};
}

struct Criterion {
  int id;
  const char* name;
  double budget;
  std::function<Outcome(std::ostream&)> run;
};

}  // namespace

std::string format_result(const CriterionResult& r) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(1);
  const char* tag = r.status == Status::Pass ? "PASS" : r.status == Status::Skip ? "SKIP" : "FAIL";
  s << tag << ' ' << r.id << ' ' << r.name << ": " << r.detail << " (" << r.seconds << "s / " << r.budget_seconds
    << "s)";
  return s.str();
}

bool all_passed(const std::vector<CriterionResult>& results) {
  return std::none_of(results.begin(), results.end(), [](const CriterionResult& r) { return r.status == Status::Fail; });
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options, std::ostream& out, std::ostream& log) {
  const std::uint64_t seed = options.seed;
  const ParamCaps layout = options.layout;
  std::vector<Criterion> criteria{
      {1, "named-family-si", 60.0 * 25, [layout](std::ostream& l) { return criterion_named_si(layout, l); }},
      {2, "comatch-clique-count", 30, criterion_comatch_cliques},
      {3, "inequality-suite", 1800, [layout](std::ostream& l) { return criterion_inequalities(layout, l); }},
      {4, "fpt-oracle-equivalence", 300, [seed](std::ostream& l) { return criterion_fpt_oracles(seed, l); }},
      {5, "constructor-validity", 120, [seed](std::ostream& l) { return criterion_constructors(seed, l); }},
      {6, "witness-suite", 300, [seed](std::ostream& l) { return criterion_witnesses(seed, l); }},
      {7, "coloring-gadget", 600, [seed](std::ostream& l) { return criterion_coloring_gadget(seed, l); }},
      {8, "idsp-gadget", 600, criterion_idsp_gadget},
      {9, "model-determinism", 60, criterion_determinism},
  };
  std::vector<CriterionResult> results;
  for (const Criterion& c : criteria) {
    if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), c.id) == options.only.end()) {
      continue;
    }
    CriterionResult r;
    r.id = c.id;
    r.name = c.name;
    r.budget_seconds = c.budget;
    auto t0 = Clock::now();
    try {
      Outcome o = c.run(log);
      r.status = o.pass ? Status::Pass : Status::Fail;
      r.detail = o.detail;
    } catch (const CapExceeded& e) {
      r.status = Status::Skip;
      r.detail = std::string("skipped: ") + e.what();
    } catch (const std::exception& e) {
      r.status = Status::Fail;
      r.detail = std::string("error: ") + e.what();
    }
    r.seconds = since(t0);
    if (r.status == Status::Pass && r.seconds > r.budget_seconds) {
      r.status = Status::Fail;
      r.detail += "; over time budget";
    }
    out << format_result(r) << std::endl;
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace simint

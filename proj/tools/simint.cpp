// simint: command-line front end. Every successful run ends stdout with one
// summary line "ok key=value ...". Exit codes: 0 ok, 1 "no" or violation,
// 2 usage or input error, 3 cap exceeded.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "simint/acceptance.hpp"
#include "simint/constructors.hpp"
#include "simint/errors.hpp"
#include "simint/params.hpp"
#include "simint/reductions.hpp"
#include "simint/rep_io.hpp"
#include "simint/solvers.hpp"

namespace {

using namespace simint;

constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;
constexpr int kCap = 3;

// Raised for command-line combinations CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  std::uint64_t seed = 20240607;
  std::string output;
  ParamCaps params;

  bool text() const { return format == "text"; }
};

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string set_line(const std::vector<Vertex>& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + std::to_string(s[i]);
  return out;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return in;
}

// Writes a document to -o when given, otherwise to stdout ahead of the summary.
void emit_document(const Options& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.output);
  if (!out) throw std::runtime_error("cannot write " + opt.output);
  out << text;
}

int run_construct(const Options& opt, const std::string& method, const std::string& graph_path,
                  const std::string& cover_path, const std::string& pd_path, std::vector<int> sizes,
                  int cycle_n, bool greedy) {
  Graph g;
  SimRep rep;
  auto need_graph = [&] {
    if (graph_path.empty()) throw UsageError("--method " + method + " needs a graph file");
    g = read_graph_file(graph_path);
  };
  if (method == "edges") {
    need_graph();
    rep = construct_from_edges(g);
  } else if (method == "ecc") {
    need_graph();
    EdgeCliqueCover cover;
    if (!cover_path.empty()) {
      auto in = open_input(cover_path);
      cover = parse_cover(in);
    } else {
      cover = greedy ? ecc_greedy(g) : ecc_exact(g, opt.params).cover;
    }
    rep = construct_from_ecc(g, cover);
  } else if (method == "bipartite") {
    need_graph();
    auto sides = find_bipartition(g);
    if (!sides) throw std::invalid_argument("graph is not bipartite");
    rep = construct_bipartite(g, *sides);
  } else if (method == "3partite") {
    if (sizes.size() == 1) sizes.assign(3, sizes[0]);
    if (sizes.size() != 3) throw UsageError("--method 3partite needs --sizes s or --sizes s,s,s");
    auto c = construct_3partite(sizes[0], sizes[1], sizes[2]);
    g = std::move(c.graph);
    rep = std::move(c.rep);
  } else if (method == "cycle") {
    if (cycle_n <= 0) throw UsageError("--method cycle needs --n");
    auto c = construct_cycle(cycle_n);
    g = std::move(c.graph);
    rep = std::move(c.rep);
  } else {
    need_graph();
    PathDecomposition pd;
    if (!pd_path.empty()) {
      auto in = open_input(pd_path);
      pd = parse_decomposition(in);
    } else {
      pd = pathwidth_exact(g, opt.params).decomposition;
    }
    rep = construct_from_path_decomposition(g, pd);
  }
  bool ok = verify_representation(g, rep).valid;
  emit_document(opt, write_rep_string(g, rep));
  std::cout << "ok method=" << method << " n=" << g.n() << " d=" << rep.d() << " valid=" << bool_str(ok) << '\n';
  return ok ? kOk : kNo;
}

int run_verify(const Options& opt, const std::string& path) {
  RepDocument doc = read_rep_file(path);
  VerifyResult r = verify_representation(doc.graph, doc.rep);
  if (r.valid) {
    std::cout << "ok valid=true d=" << doc.rep.d() << '\n';
    return kOk;
  }
  const Violation& v = *r.violation;
  if (opt.text()) std::cout << to_string(v.kind) << " edge {" << v.u << "," << v.v << "}\n";
  std::cout << "ok valid=false d=" << doc.rep.d() << " u=" << v.u << " v=" << v.v << " kind=" << to_string(v.kind)
            << '\n';
  return kNo;
}

int run_si(const Options& opt, const std::string& path, bool exact, int decide) {
  Graph g = read_graph_file(path);
  if (exact == (decide >= 0)) throw UsageError("give exactly one of --exact or --decide D");
  if (exact) {
    SiResult r = si_exact(g, opt.params);
    if (!opt.output.empty()) write_rep_file(opt.output, g, r.witness);
    std::cout << "ok si=" << r.value << '\n';
    return kOk;
  }
  SiDecision r = si_decide(g, decide, opt.params);
  if (r.yes && !opt.output.empty()) write_rep_file(opt.output, g, *r.witness);
  std::cout << "ok result=" << (r.yes ? "yes" : "no") << " d=" << decide << " layouts=" << r.layouts_tried << '\n';
  return r.yes ? kOk : kNo;
}

int run_param(const Options& opt, const std::string& which, const std::string& path) {
  Graph g = read_graph_file(path);
  int value = 0;
  if (which == "ecc") {
    EccResult r = ecc_exact(g, opt.params);
    value = r.value;
    if (opt.text()) {
      for (const auto& c : r.cover.cliques) std::cout << set_line(c) << '\n';
    }
  } else if (which == "pw") {
    PathwidthResult r = pathwidth_exact(g, opt.params);
    value = r.value;
    if (opt.text()) {
      for (const auto& b : r.decomposition.bags) std::cout << set_line(b) << '\n';
    }
  } else if (which == "lmim") {
    LmimResult r = linear_mim_exact(g, opt.params);
    value = r.value;
    if (opt.text()) std::cout << "order " << set_line(r.witness.order) << '\n';
  } else {
    value = path_alpha_exact(g, opt.params);
  }
  std::cout << "ok param=" << which << " value=" << value << '\n';
  return kOk;
}

int run_witness(const Options& opt, const std::string& which, const std::string& path) {
  RepDocument doc = read_rep_file(path);
  const Graph& g = doc.graph;
  const SimRep& rep = doc.rep;
  if (which == "thin") {
    ThinnessWitness w = thinness_witness(g, rep);
    bool ok = validate_thinness(g, w);
    if (opt.text()) {
      std::cout << "order " << set_line(w.order) << '\n';
      for (const auto& c : w.classes) std::cout << "class " << set_line(c) << '\n';
    }
    std::cout << "ok witness=thin classes=" << w.classes.size() << " d=" << rep.d() << " valid=" << bool_str(ok)
              << '\n';
    return ok ? kOk : kNo;
  }
  if (which == "lmim") {
    LmimWitness w = lmim_witness(g, rep, opt.params);
    if (opt.text()) {
      std::cout << "order " << set_line(w.order) << '\n';
      if (w.verified) std::cout << "cuts " << set_line(w.cut_values) << '\n';
    }
    std::cout << "ok witness=lmim bound=" << w.bound << " verified=" << bool_str(w.verified)
              << " certified=" << bool_str(w.certified()) << '\n';
    return !w.verified || w.certified() ? kOk : kNo;
  }
  PathDecomposition pd = path_decomposition_from_rep(g, rep);
  bool ok = !check_decomposition(g, pd);
  if (opt.text()) {
    for (const auto& b : pd.bags) std::cout << set_line(b) << '\n';
  }
  std::cout << "ok witness=pathdecomp bags=" << pd.bags.size() << " width=" << pd.width()
            << " valid=" << bool_str(ok) << '\n';
  return ok ? kOk : kNo;
}

std::vector<Rational> read_weights(const std::string& path, int n) {
  auto in = open_input(path);
  std::vector<Rational> w;
  std::string tok;
  while (in >> tok) w.push_back(parse_rational(tok));
  if (static_cast<int>(w.size()) != n) {
    throw std::invalid_argument("expected " + std::to_string(n) + " weights, found " + std::to_string(w.size()));
  }
  return w;
}

int run_cliques(const Options& opt, const std::string& path, const std::string& weights) {
  RepDocument doc = read_rep_file(path);
  if (!weights.empty()) {
    doc.graph.set_weights(read_weights(weights, doc.graph.n()));
    WeightedClique best = max_weight_clique(doc.graph, doc.rep);
    if (opt.text()) std::cout << set_line(best.clique) << '\n';
    std::cout << "ok weight=" << to_string(best.weight) << " size=" << best.clique.size() << '\n';
    return kOk;
  }
  CliqueEnumeration r = enumerate_maximal_cliques(doc.graph, doc.rep);
  if (opt.text()) {
    for (const auto& c : r.cliques) std::cout << set_line(c) << '\n';
  }
  bool bound = within_clique_bound(r.cliques.size(), doc.rep.d(), doc.graph.n());
  std::cout << "ok count=" << r.cliques.size() << " selections=" << r.selections << " d=" << doc.rep.d()
            << " within_bound=" << bool_str(bound) << '\n';
  return kOk;
}

int run_solve(const Options& opt, const std::string& problem, int k, const std::string& path) {
  RepDocument doc = read_rep_file(path);
  SearchResult r = problem == "is" ? independent_set_fpt(doc.graph, doc.rep, k)
                                   : dominating_set_fpt(doc.graph, doc.rep, k);
  if (r.yes && opt.text()) std::cout << set_line(r.witness) << '\n';
  std::cout << "ok result=" << (r.yes ? "yes" : "no") << " value=" << (r.yes ? static_cast<int>(r.witness.size()) : k)
            << " nodes=" << r.nodes << " leaves=" << r.leaves << '\n';
  return r.yes ? kOk : kNo;
}

int run_reduce(const Options& opt, const std::string& which, const std::string& path, const std::string& meta_path,
               const std::string& spacing) {
  auto in = open_input(path);
  nlohmann::ordered_json meta;
  Graph g;
  SimRep rep;
  if (which == "coloring") {
    DisjointPathsInstance inst = parse_dp_instance(in);
    Preprocessed pre = preprocess_degree_one(inst);
    ColoringGadget gadget = coloring_gadget(pre.instance);
    meta = {{"k", gadget.k}, {"m", inst.g.m()}, {"q", nullptr}, {"target", gadget.k}};
    g = std::move(gadget.graph);
    rep = std::move(gadget.rep);
  } else {
    MispInstance inst = parse_misp_instance(in);
    IdspGadget gadget = misp_to_idsp_gadget(inst, spacing == "literal" ? SSpacing::Literal : SSpacing::HalfStep);
    meta = {{"k", gadget.k}, {"m", gadget.m}, {"q", gadget.q}, {"target", gadget.target}};
    g = std::move(gadget.graph);
    rep = std::move(gadget.rep);
  }
  emit_document(opt, write_rep_string(g, rep));
  std::string sidecar = !meta_path.empty() ? meta_path : opt.output.empty() ? "" : opt.output + ".meta.json";
  if (!sidecar.empty()) {
    std::ofstream out(sidecar);
    if (!out) throw std::runtime_error("cannot write " + sidecar);
    out << meta.dump(2) << '\n';
  }
  std::cout << "ok gadget=" << which << " n=" << g.n() << " d=" << rep.d() << " k=" << meta["k"]
            << " m=" << meta["m"] << " q=" << (meta["q"].is_null() ? std::string("none") : meta["q"].dump())
            << " target=" << meta["target"] << '\n';
  return kOk;
}

int run_selftest(const Options& opt, const std::vector<int>& only) {
  AcceptanceOptions a;
  a.seed = opt.seed;
  a.only = only;
  a.layout = opt.params;
  std::ostringstream sink;
  std::ostream& log = opt.text() ? std::cout : sink;
  std::cout << "seed " << a.seed << '\n';
  auto results = run_acceptance(a, std::cout, log);
  int pass = 0, fail = 0, skip = 0;
  for (const auto& r : results) {
    (r.status == Status::Pass ? pass : r.status == Status::Fail ? fail : skip) += 1;
  }
  std::cout << "ok passed=" << pass << " failed=" << fail << " skipped=" << skip << " seed=" << a.seed << '\n';
  return fail == 0 ? kOk : kNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simultaneous interval representations: construct, verify, solve, reduce."};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--seed", opt.seed, "seed for randomized runs");
  app.add_option("-o,--output", opt.output, "write the produced document here");
  app.add_option("--cap-ecc", opt.params.ecc_edges, "edge cap for exact edge clique cover");
  app.add_option("--cap-layout", opt.params.layout_vertices, "vertex cap for layout searches (si, lmim, path-alpha)");
  app.add_option("--cap-pathwidth", opt.params.pathwidth_vertices, "vertex cap for exact pathwidth");
  app.add_option("--cap-lmim", opt.params.lmim_verify_vertices, "vertex cap for lmim witness certification");

  std::function<int()> action;

  auto* construct = app.add_subcommand("construct", "build a representation with one of the constructions");
  std::string method, graph_path, cover_path, pd_path;
  std::vector<int> sizes;
  int cycle_n = 0;
  bool greedy = false;
  construct->add_option("--method", method)
      ->required()
      ->check(CLI::IsMember({"edges", "ecc", "bipartite", "3partite", "cycle", "pathdecomp"}));
  construct->add_option("graph", graph_path, "edge-list graph file");
  construct->add_option("--cover", cover_path, "clique cover, one clique per line");
  construct->add_option("--decomposition", pd_path, "path decomposition, one bag per line");
  construct->add_option("--sizes", sizes, "part size(s) for 3partite")->delimiter(',');
  construct->add_option("--n", cycle_n, "cycle length");
  construct->add_flag("--greedy", greedy, "use the greedy cover when no --cover is given");
  construct->callback([&] {
    action = [&] { return run_construct(opt, method, graph_path, cover_path, pd_path, sizes, cycle_n, greedy); };
  });

  auto* verify = app.add_subcommand("verify", "check a representation file against its graph");
  std::string rep_path;
  verify->add_option("rep", rep_path)->required();
  verify->callback([&] { action = [&] { return run_verify(opt, rep_path); }; });

  auto* si = app.add_subcommand("si", "exact simultaneous interval number");
  bool exact = false;
  int decide = -1;
  si->add_flag("--exact", exact);
  si->add_option("--decide", decide, "decide si <= D");
  si->add_option("graph", graph_path)->required();
  si->callback([&] { action = [&] { return run_si(opt, graph_path, exact, decide); }; });

  auto* param = app.add_subcommand("param", "exact ecc, pathwidth, linear mim-width or path-independence number");
  std::string which;
  param->add_option("which", which)->required()->check(CLI::IsMember({"ecc", "pw", "lmim", "palpha"}));
  param->add_option("graph", graph_path)->required();
  param->callback([&] { action = [&] { return run_param(opt, which, graph_path); }; });

  auto* witness = app.add_subcommand("witness", "extract a width witness from a representation");
  witness->add_option("which", which)->required()->check(CLI::IsMember({"thin", "lmim", "pathdecomp"}));
  witness->add_option("rep", rep_path)->required();
  witness->callback([&] { action = [&] { return run_witness(opt, which, rep_path); }; });

  auto* cliques = app.add_subcommand("cliques", "enumerate maximal cliques from a representation");
  std::string weights;
  cliques->add_option("rep", rep_path)->required();
  cliques->add_option("--weights", weights, "one positive rational weight per vertex; reports a heaviest clique");
  cliques->callback([&] { action = [&] { return run_cliques(opt, rep_path, weights); }; });

  auto* solve = app.add_subcommand("solve", "bounded search tree for independent or dominating set");
  int k = 0;
  solve->add_option("problem", which)->required()->check(CLI::IsMember({"is", "ds"}));
  solve->add_option("--k", k)->required()->check(CLI::NonNegativeNumber);
  solve->add_option("rep", rep_path)->required();
  solve->callback([&] { action = [&] { return run_solve(opt, which, k, rep_path); }; });

  auto* reduce = app.add_subcommand("reduce", "build a reduction gadget from a source instance");
  std::string instance_path, meta_path, spacing = "half";
  reduce->add_option("gadget", which)->required()->check(CLI::IsMember({"coloring", "idsp"}));
  reduce->add_option("instance", instance_path)->required();
  reduce->add_option("--meta", meta_path, "metadata sidecar path (default: <output>.meta.json)");
  reduce->add_option("--spacing", spacing, "S-interval tiling for idsp")->check(CLI::IsMember({"half", "literal"}));
  reduce->callback([&] { action = [&] { return run_reduce(opt, which, instance_path, meta_path, spacing); }; });

  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
  std::vector<int> only;
  selftest->add_option("--only", only, "run only these criteria");
  selftest->callback([&] { action = [&] { return run_selftest(opt, only); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  try {
    return action();
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}

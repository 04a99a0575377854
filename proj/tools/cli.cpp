#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "agp/detour.hpp"
#include "agp/diameter.hpp"
#include "agp/gadgets.hpp"
#include "agp/graph_io.hpp"
#include "agp/oracle.hpp"
#include "suites.hpp"

namespace agp::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Json = nlohmann::ordered_json;

std::vector<int> one_based(const std::vector<Vertex>& xs) {
  std::vector<int> out;
  for (Vertex x : xs) out.push_back(x + 1);
  return out;
}

Vertex vertex_arg(int v, int n, const char* what) {
  if (v < 1 || v > n) {
    throw UsageError(std::string(what) + " must lie in [1," + std::to_string(n) + "], got " +
                     std::to_string(v));
  }
  return v - 1;
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::yes: return kYes;
    case Verdict::no: return kNo;
    case Verdict::inconclusive: return kInconclusive;
  }
  return kInconclusive;
}

std::string delta_text(double delta) {
  std::ostringstream s;
  s << "randomized(delta=" << delta << ")";
  return s.str();
}

Json oracle_json(const OracleAnswer& a) {
  Json j;
  j["value"] = a.value;
  j["exact"] = a.exact;
  j["path"] = one_based(a.witness.vertices);
  return j;
}

struct Options {
  std::string graph, blueprint_in, output, blueprint_out, backend = "exhaustive",
                                                          strategy = "auto", mode, suite,
                                                          audit_log;
  int source = 0, target = 0, k = 0, ell = 0, w = 0, threads = 1, oracle_cap = 20;
  std::uint64_t seed = 0x5eedULL, budget = 100'000'000;
  double delta = 1e-3;
  bool undirected = false, explain = false;
};

SubroutineConfig subroutine_config(const Options& o) {
  SubroutineConfig cfg;
  const auto strat = parse_strategy(o.strategy);
  if (!strat) throw UsageError("unknown strategy '" + o.strategy + "'");
  cfg.strategy = *strat;
  cfg.seed = o.seed;
  cfg.failure_probability = o.delta;
  cfg.limits.dp_vertex_cap = o.oracle_cap;
  cfg.limits.bnb_node_budget = o.budget;
  return cfg;
}

OracleLimits oracle_limits(const Options& o) {
  OracleLimits l;
  l.dp_vertex_cap = o.oracle_cap;
  l.bnb_node_budget = o.budget;
  return l;
}

int cmd_detour(const Options& o, std::ostream& out, std::ostream& err) {
  const auto file = io::read_graph_file(o.graph);
  if (o.undirected && file.directed()) {
    throw UsageError("--undirected given but " + o.graph + " is a directed (dg) file");
  }
  const int n = std::visit([](const auto& g) { return g.vertex_count(); }, file.graph);
  const Vertex s = vertex_arg(o.source, n, "--source");
  const Vertex t = vertex_arg(o.target, n, "--target");
  if (s == t) throw UsageError("--source and --target must differ");
  if (o.k < 0) throw UsageError("--k must be non-negative");
  if (o.threads < 1) throw UsageError("--threads must be positive");
  if (!has_chain_backend(o.backend)) throw UsageError("unknown backend '" + o.backend + "'");

  DetourConfig cfg;
  cfg.subroutine = subroutine_config(o);
  cfg.backend = o.backend;
  cfg.threads = o.threads;
  const DetourQuery q = file.directed() ? DetourQuery{std::cref(file.digraph()), s, t, o.k}
                                        : DetourQuery{std::cref(file.ugraph()), s, t, o.k};
  const auto a = solve_detour(q, cfg);

  io::WitnessDocument doc;
  doc.found = a.verdict == Verdict::yes;
  doc.verdict = to_string(a.verdict);
  doc.stage = to_string(a.stage);
  doc.baseline_kind = "dist";
  if (a.distance >= 0) doc.baseline = a.distance;
  if (a.witness) {
    doc.path = a.witness->vertices;
    doc.length = a.witness->length();
  }
  if (a.verdict == Verdict::inconclusive) {
    doc.verdict_meta = "inconclusive";
  } else if (a.verdict == Verdict::no && cfg.subroutine.strategy == Strategy::color_coding) {
    doc.verdict_meta = delta_text(cfg.subroutine.failure_probability);
  } else {
    doc.verdict_meta = "exact";
  }
  for (const auto& e : a.inconclusive) {
    doc.notes.push_back(to_string(e.stage) + ": " + e.subroutine + " inconclusive (" + e.detail + ")");
  }
  out << doc.to_json().dump(2) << '\n';
  if (o.explain) err << explain(a);
  return verdict_exit(a.verdict);
}

int cmd_lpad(const Options& o, std::ostream& out) {
  const auto mode = parse_lpad_mode(o.mode);
  if (!mode) throw UsageError("unknown mode '" + o.mode + "'");
  if (o.k < 0) throw UsageError("--k must be non-negative");
  const auto file = io::read_graph_file(o.graph);
  LpadConfig cfg;
  cfg.subroutine = subroutine_config(o);
  LpadQuery q = file.directed() ? LpadQuery{std::cref(file.digraph()), o.k, *mode}
                                : LpadQuery{std::cref(file.ugraph()), o.k, *mode};
  LpadAnswer a;
  try {
    a = solve_lpad(q, cfg);
  } catch (const LpadPreconditionError& e) {
    throw UsageError(e.what());
  }
  io::WitnessDocument doc;
  doc.found = a.verdict == Verdict::yes;
  doc.verdict = to_string(a.verdict);
  doc.stage = a.stage;
  doc.baseline_kind = "diameter";
  doc.baseline = a.diameter;
  if (a.witness) {
    doc.path = a.witness->vertices;
    doc.length = a.witness->length();
  }
  if (a.verdict == Verdict::inconclusive) {
    doc.verdict_meta = "inconclusive";
  } else if (a.verdict == Verdict::no && a.randomized) {
    doc.verdict_meta = delta_text(a.failure_probability);
  } else {
    doc.verdict_meta = "exact";
  }
  doc.notes = a.notices;
  for (const auto& s : a.inconclusive) doc.notes.push_back(s + " inconclusive");
  out << doc.to_json().dump(2) << '\n';
  return verdict_exit(a.verdict);
}

void write_blueprint(const std::string& path, const Json& j) {
  if (!path.empty()) io::write_text_file(path, j.dump(2) + "\n");
}

int cmd_gen_gl(const Options& o, std::ostream& out) {
  if (o.ell < 1) throw UsageError("--ell must be positive");
  const auto [g, bp] = build_G_ell(o.ell);
  io::write_text_file(o.output, io::format_graph(g, "G_ell ell=" + std::to_string(o.ell)));
  write_blueprint(o.blueprint_out, io::blueprint_to_json(bp));
  out << "wrote " << o.output << ": " << g.vertex_count() << " vertices, " << g.arc_count()
      << " arcs\n";
  return kYes;
}

int cmd_gen_reduce_k1(const Options& o, std::ostream& out) {
  const auto file = io::read_graph_file(o.graph);
  if (file.directed()) throw UsageError("reduce-k1 needs an undirected (ug) graph");
  const auto r = reduce_k1(file.ugraph());
  io::write_text_file(o.output, io::format_graph(*r.undirected, "reduction k=1"));
  write_blueprint(o.blueprint_out, io::embedding_to_json(r));
  out << "wrote " << o.output << ": " << r.undirected->vertex_count() << " vertices, diameter "
      << r.claimed_diameter << ", target k=" << r.target_k << "\n";
  return kYes;
}

int cmd_gen_reduce_kge5(const Options& o, std::ostream& out) {
  const auto file = io::read_graph_file(o.graph);
  if (file.directed()) throw UsageError("reduce-kge5 needs an undirected (ug) graph");
  const auto& h = file.ugraph();
  const Vertex w = vertex_arg(o.w, h.vertex_count(), "--w");
  const auto r = reduce_kge5(h, w, o.k);
  io::write_text_file(o.output, io::format_graph(r.graph, "reduction k=" + std::to_string(o.k)));
  write_blueprint(o.blueprint_out, io::embedding_to_json(r));
  out << "wrote " << o.output << ": " << r.graph.vertex_count() << " vertices, diameter "
      << r.claimed_diameter << ", target k=" << r.target_k << "\n";
  return kYes;
}

int cmd_verify_gl(const Options& o, std::ostream& out) {
  const auto file = io::read_graph_file(o.graph);
  if (!file.directed()) throw UsageError("verify gl needs a directed (dg) graph");
  std::ifstream in(o.blueprint_in);
  if (!in) throw UsageError("cannot open " + o.blueprint_in);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("bad blueprint document: ") + e.what());
  }
  const auto bp = io::blueprint_from_json(j);
  if (bp.vertex_count() != file.digraph().vertex_count()) {
    throw UsageError("blueprint describes " + std::to_string(bp.vertex_count()) +
                     " vertices, graph has " + std::to_string(file.digraph().vertex_count()));
  }
  const auto report = verify_G_ell(file.digraph(), bp);
  out << report.to_text();
  return report.ok() ? kYes : kNo;
}

template <class Graph>
int oracle_on(const std::string& which, const Graph& g, const Options& o, std::ostream& out) {
  const auto limits = oracle_limits(o);
  const int n = g.vertex_count();
  Json j;
  bool exact = true;
  if (which == "longest-path") {
    const auto a = longest_path_oracle(g, limits);
    j = oracle_json(a);
    exact = a.exact;
  } else if (which == "longest-st-path") {
    const Vertex s = vertex_arg(o.source, n, "--source");
    const Vertex t = vertex_arg(o.target, n, "--target");
    const auto a = longest_st_path_oracle(g, s, t, limits);
    if (!a) {
      out << Json{{"reachable", false}}.dump(2) << '\n';
      return kNo;
    }
    j = oracle_json(*a);
    exact = a->exact;
  } else if (which == "detour") {
    const Vertex s = vertex_arg(o.source, n, "--source");
    const Vertex t = vertex_arg(o.target, n, "--target");
    try {
      const auto a = detour_oracle(g, s, t, limits);
      j["k_star"] = a.k_star;
      j["distance"] = a.distance;
      j["longest"] = oracle_json(a.longest);
      exact = a.longest.exact;
    } catch (const UnreachableTarget&) {
      out << Json{{"reachable", false}}.dump(2) << '\n';
      return kNo;
    }
  } else {
    const auto d = diameter_and_pair(g);
    j["diameter"] = d.diameter;
    j["from"] = d.from + 1;
    j["to"] = d.to + 1;
  }
  out << j.dump(2) << '\n';
  return exact ? kYes : kInconclusive;
}

int cmd_oracle(const std::string& which, const Options& o, std::ostream& out) {
  const auto file = io::read_graph_file(o.graph);
  if (file.directed()) return oracle_on(which, file.digraph(), o, out);
  return oracle_on(which, file.ugraph(), o, out);
}

int cmd_bench(const Options& o, std::ostream& out) {
  suites::AuditLog log;
  std::vector<std::string> names;
  if (o.suite == "all") {
    names = suites::suite_names();
  } else {
    const auto all = suites::suite_names();
    if (std::find(all.begin(), all.end(), o.suite) == all.end()) {
      throw UsageError("unknown suite '" + o.suite + "'");
    }
    names = {o.suite};
  }
  bool ok = true;
  for (const auto& name : names) {
    const auto r = suites::run_suite(name, log);
    out << suites::format_table(r);
    ok = ok && r.passed;
  }
  if (!o.audit_log.empty()) log.write(o.audit_log);
  return ok ? kYes : kNo;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"agp: detours and long paths above guarantee"};
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;

  auto* detour = app.add_subcommand("detour", "(s,t)-path of length >= dist(s,t)+k");
  detour->add_option("--graph", o.graph, "graph file")->required();
  detour->add_option("--source", o.source, "source vertex (1-indexed)")->required();
  detour->add_option("--target", o.target, "target vertex (1-indexed)")->required();
  detour->add_option("--k", o.k, "offset above dist(s,t)")->required();
  detour->add_flag("--undirected", o.undirected, "require an undirected (ug) file");
  detour->add_option("--backend", o.backend, "three-chain backend");
  detour->add_option("--seed", o.seed, "seed for color coding");
  detour->add_option("--strategy", o.strategy, "auto | color-coding | subset-dp | bnb");
  detour->add_option("--delta", o.delta, "color-coding failure probability");
  detour->add_option("--oracle-cap", o.oracle_cap, "subset DP vertex cap");
  detour->add_option("--budget", o.budget, "branch-and-bound node budget");
  detour->add_option("--threads", o.threads, "enumeration workers");
  detour->add_flag("--explain", o.explain, "print the stage trace to stderr");
  detour->callback([&] { action = [&] { return cmd_detour(o, out, err); }; });

  auto* lpad = app.add_subcommand("lpad", "path of length >= diameter+k");
  lpad->add_option("--graph", o.graph, "graph file")->required();
  lpad->add_option("--k", o.k, "offset above the diameter")->required();
  lpad->add_option("--mode", o.mode, "undirected2c | directed2sc | oracle")->required();
  lpad->add_option("--strategy", o.strategy, "auto | color-coding | subset-dp | bnb");
  lpad->add_option("--seed", o.seed, "seed for color coding");
  lpad->add_option("--oracle-cap", o.oracle_cap, "subset DP vertex cap");
  lpad->add_option("--budget", o.budget, "branch-and-bound node budget");
  lpad->callback([&] { action = [&] { return cmd_lpad(o, out); }; });

  auto* gen = app.add_subcommand("gen", "write gadget graphs and reductions");
  gen->require_subcommand(1);
  auto* gl = gen->add_subcommand("gl", "the gadget graph G_ell");
  gl->add_option("--ell", o.ell, "ell >= 1")->required();
  auto* k1 = gen->add_subcommand("reduce-k1", "Hamiltonian path to the k=1 undirected instance");
  k1->add_option("--graph", o.graph, "undirected input graph")->required();
  auto* kge5 = gen->add_subcommand("reduce-kge5", "Hamiltonian path to a 2-strongly-connected instance");
  kge5->add_option("--graph", o.graph, "undirected input graph H")->required();
  kge5->add_option("--k", o.k, "k >= 5")->required();
  kge5->add_option("--w", o.w, "start vertex of H (1-indexed)")->required();
  for (auto* sub : {gl, k1, kge5}) {
    sub->add_option("-o,--output", o.output, "graph output file")->required();
    sub->add_option("--blueprint", o.blueprint_out, "blueprint or embedding document");
  }
  gl->callback([&] { action = [&] { return cmd_gen_gl(o, out); }; });
  k1->callback([&] { action = [&] { return cmd_gen_reduce_k1(o, out); }; });
  kge5->callback([&] { action = [&] { return cmd_gen_reduce_kge5(o, out); }; });

  auto* verify = app.add_subcommand("verify", "check a generated gadget graph");
  verify->require_subcommand(1);
  auto* vgl = verify->add_subcommand("gl", "check G_ell against its blueprint");
  vgl->add_option("--graph", o.graph, "graph file")->required();
  vgl->add_option("--blueprint", o.blueprint_in, "blueprint document")->required();
  vgl->callback([&] { action = [&] { return cmd_verify_gl(o, out); }; });

  auto* oracle = app.add_subcommand("oracle", "exact reference answers");
  oracle->require_subcommand(1);
  for (const char* which : {"longest-path", "longest-st-path", "detour", "diameter"}) {
    auto* sub = oracle->add_subcommand(which);
    sub->add_option("--graph", o.graph, "graph file")->required();
    if (std::string(which) == "longest-st-path" || std::string(which) == "detour") {
      sub->add_option("--source", o.source, "source vertex (1-indexed)")->required();
      sub->add_option("--target", o.target, "target vertex (1-indexed)")->required();
    }
    sub->add_option("--oracle-cap", o.oracle_cap, "subset DP vertex cap");
    sub->add_option("--budget", o.budget, "branch-and-bound node budget");
    const std::string name = which;
    sub->callback([&, name] { action = [&, name] { return cmd_oracle(name, o, out); }; });
  }

  auto* bench = app.add_subcommand("bench", "run an acceptance suite");
  bench->add_option("--suite", o.suite, "suite name or 'all'")->required();
  bench->add_option("--audit-log", o.audit_log, "write the answer audit log here");
  bench->callback([&] { action = [&] { return cmd_bench(o, out); }; });

  std::vector<std::string> reversed_args(args.rbegin(), args.rend());
  try {
    app.parse(reversed_args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    return action ? action() : kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const io::ParseError& e) {
    err << "parse error: " << o.graph << ": " << e.what() << '\n';
  } catch (const ReductionError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kUsage;
}

}  // namespace agp::cli

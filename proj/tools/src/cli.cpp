#include "errold_cli/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "errold/canonical.hpp"
#include "errold/cnf.hpp"
#include "errold/detection.hpp"
#include "errold/errors.hpp"
#include "errold/extremal.hpp"
#include "errold/graph_io.hpp"
#include "errold/grids.hpp"
#include "errold/reduction.hpp"
#include "errold/solver.hpp"
#include "errold_cli/report.hpp"

namespace errold::cli {
namespace {

struct Options {
  std::string graph;
  std::string set;
  std::string kind = "err";
  int k = 0;
  int n = 0;
  std::optional<int> m;
  std::string cnf;
  std::string pattern;
  std::string grid;
  int max_index = 0;
  int jobs = 1;
  std::optional<std::uint64_t> budget;
  std::string out;
  int window = 8;
};

using Handler = std::function<void(const Options&, Report&)>;

std::string join(const std::vector<int>& ids) {
  std::string s;
  for (int v : ids) {
    if (!s.empty()) s += ' ';
    s += std::to_string(v);
  }
  return s;
}

std::string rational(const grids::Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string point(grids::Point p) { return std::to_string(p.x) + " " + std::to_string(p.y); }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

Graph load_graph(const Options& o, Report& r) {
  Graph g = read_edge_list_file(o.graph);
  r.add("graph_sha256", file_sha256(o.graph));
  r.add("vertices", g.n());
  r.add("edges", g.m());
  return g;
}

VertexSet load_set(const Options& o, const Graph& g, Report& r) {
  VertexSet s = read_detector_set_file(o.set, g.n());
  r.add("set_sha256", file_sha256(o.set));
  r.add("set_size", s.count());
  return s;
}

CnfFormula load_cnf(const Options& o, Report& r) {
  CnfFormula f = read_dimacs_file(o.cnf);
  r.add("cnf_sha256", file_sha256(o.cnf));
  r.add("variables", f.num_variables);
  r.add("clauses", f.num_clauses());
  return f;
}

grids::PeriodicPattern load_pattern(const Options& o, Report& r) {
  grids::PeriodicPattern p = grids::read_pattern_file(o.pattern);
  r.add("pattern_sha256", file_sha256(o.pattern));
  r.add("grid", std::string(grids::to_string(p.kind.name)));
  r.add("index", static_cast<long long>(p.lattice().index()));
  r.add("density", rational(grids::pattern_density(p)));
  return p;
}

void add_witness(Report& r, const Witness& w) {
  if (const auto* v = std::get_if<VertexWitness>(&w)) {
    r.add("witness_type", "domination");
    r.add("witness_vertices", std::to_string(v->vertex));
    r.add("witness_value", v->domination);
  } else {
    const auto& p = std::get<PairWitness>(w);
    r.add("witness_type", "pair");
    r.add("witness_vertices", std::to_string(p.u) + " " + std::to_string(p.v));
    r.add("witness_value", p.value);
  }
}

void cmd_verify(const Options& o, Report& r) {
  const DetectionKind kind = parse_kind(o.kind);
  const Graph g = load_graph(o, r);
  const VertexSet s = load_set(o, g, r);
  r.add("kind", std::string(kind.name));
  const Verdict v = verify(g, s, kind);
  r.add("pass", v.pass);
  if (v.failure_witness) add_witness(r, *v.failure_witness);
  if (!v.pass) r.set_status(Status::fail);
}

void cmd_exists(const Options& o, Report& r) {
  const Graph g = load_graph(o, r);
  const ExistenceResult e = exists_err_old(g);
  r.add("exists", e.exists);
  if (e.witness) {
    if (const auto* low = std::get_if<LowDegreeWitness>(&*e.witness)) {
      r.add("witness_type", "low-degree");
      r.add("witness_vertices", std::to_string(low->vertex));
      r.add("witness_value", low->degree);
    } else {
      const auto& c = std::get<FourCycleWitness>(*e.witness);
      r.add("witness_type", "four-cycle");
      r.add("witness_cycle", join({c.cycle.begin(), c.cycle.end()}));
      r.add("witness_vertices", std::to_string(c.u) + " " + std::to_string(c.v));
      r.add("witness_value", c.value);
    }
  }
  if (!e.exists) r.set_status(Status::fail);
}

SolveOptions solve_options(const Options& o) {
  SolveOptions opts;
  opts.jobs = o.jobs;
  opts.node_budget = o.budget;
  return opts;
}

void cmd_solve(const Options& o, Report& r) {
  const DetectionKind kind = parse_kind(o.kind);
  const Graph g = load_graph(o, r);
  r.add("kind", std::string(kind.name));
  const SolveResult res = minimum_detector_set(g, kind, solve_options(o));
  r.add("feasible", res.status == SolveStatus::optimal);
  if (res.status == SolveStatus::optimal) {
    r.add("optimum", *res.optimum);
    r.add("witness_set", join(res.witness_set->to_vector()));
    if (!o.out.empty()) {
      std::ostringstream text;
      write_detector_set(text, *res.witness_set);
      write_file(o.out, text.str());
      r.add("output", o.out);
    }
  } else {
    r.set_status(Status::fail);
  }
  r.add("nodes_explored", static_cast<unsigned long long>(res.nodes_explored));
}

void cmd_decide(const Options& o, Report& r) {
  const DetectionKind kind = parse_kind(o.kind);
  const Graph g = load_graph(o, r);
  r.add("kind", std::string(kind.name));
  r.add("k", o.k);
  const bool answer = decision(g, kind, o.k, solve_options(o));
  r.add("answer", answer);
  if (!answer) r.set_status(Status::fail);
}

void cmd_enumerate(const Options& o, Report& r) {
  const DetectionKind kind = parse_kind(o.kind);
  r.add("n", o.n);
  if (o.m) r.add("m", *o.m);
  r.add("kind", std::string(kind.name));
  EnumerationQuery q;
  q.n = o.n;
  q.edge_count = o.m;
  q.min_degree = kind.min_domination;
  q.prune_err_old = kind == kErrOld;
  q.jobs = o.jobs;
  const auto found = enumerate_graphs(q, [&](const Graph& g) { return verify(g, g.all_vertices(), kind).pass; });
  r.add("count", static_cast<long long>(found.size()));
  if (!o.out.empty()) std::filesystem::create_directories(o.out);
  for (const CanonicalGraph& c : found) {
    const std::string hex = canonical_hex(c.graph.n(), c.code);
    r.add("graph", "m " + std::to_string(c.graph.m()) + " code " + hex);
    if (!o.out.empty()) {
      const std::string name = "n" + std::to_string(c.graph.n()) + "_m" + std::to_string(c.graph.m()) + "_" + hex + ".el";
      write_file((std::filesystem::path(o.out) / name).string(), to_edge_list(c.graph));
    }
  }
  if (!o.out.empty()) r.add("output", o.out);
}

void cmd_expand(const Options& o, Report& r) {
  const Graph g = load_graph(o, r);
  const auto pair = first_expandable_pair(g);
  r.add("expandable", pair.has_value());
  if (!pair) {
    r.set_status(Status::fail);
    return;
  }
  const Graph h = quasi_cubic_expand(g, pair->first, pair->second);
  r.add("edge1", std::to_string(pair->first.u) + " " + std::to_string(pair->first.v));
  r.add("edge2", std::to_string(pair->second.u) + " " + std::to_string(pair->second.v));
  r.add("new_vertex", g.n());
  r.add("result_vertices", h.n());
  r.add("result_edges", h.m());
  r.add("quasi_cubic", degree_summary(h).quasi_cubic);
  r.add("exists", exists_err_old(h).exists);
  const std::string text = to_edge_list(h);
  r.add("result_sha256", text_sha256(text));
  if (!o.out.empty()) {
    write_file(o.out, text);
    r.add("output", o.out);
  }
}

void cmd_reduce(const Options& o, Report& r) {
  const CnfFormula f = load_cnf(o, r);
  const ReductionInstance inst = build_instance(f);
  r.add("vertices", inst.graph.n());
  r.add("edges", inst.graph.m());
  r.add("k", inst.k);
  r.add("forced", inst.forced.count());
  const std::string graph_text = to_edge_list(inst.graph);
  std::ostringstream manifest;
  write_manifest(manifest, inst);
  r.add("graph_output_sha256", text_sha256(graph_text));
  r.add("manifest_output_sha256", text_sha256(manifest.str()));
  if (!o.out.empty()) {
    write_file(o.out + ".el", graph_text);
    write_file(o.out + ".manifest", manifest.str());
    r.add("output", o.out + ".el");
    r.add("output", o.out + ".manifest");
  }
}

void cmd_gadget_check(const Options& o, Report& r) {
  const CnfFormula f = load_cnf(o, r);
  ReductionInstance inst = build_instance(f);
  if (!o.graph.empty()) inst = with_graph(inst, load_graph(o, r));
  const GadgetReport rep = validate_gadgets(inst);
  r.add("ok", rep.ok);
  r.add("forced", rep.forced_count);
  r.add("lower_bound_confirmed",
        rep.lower_bound_confirmed ? std::string(*rep.lower_bound_confirmed ? "true" : "false") : std::string("skipped"));
  for (const std::string& d : rep.defects) r.add("defect", d);
  if (!rep.ok) r.set_status(Status::fail);
}

void cmd_roundtrip(const Options& o, Report& r) {
  const CnfFormula f = load_cnf(o, r);
  const RoundtripResult rt = roundtrip_check(f, o.jobs);
  r.add("satisfiable", rt.satisfiable);
  r.add("graph_decision", rt.graph_decision);
  r.add("agree", rt.agree);
  r.add("subsets_checked", static_cast<unsigned long long>(rt.subsets_checked));
  if (rt.witness) r.add("witness_size", rt.witness->count());
  if (rt.decoded) {
    std::string lits;
    for (std::size_t i = 0; i < rt.decoded->size(); ++i) {
      if (!lits.empty()) lits += ' ';
      lits += ((*rt.decoded)[i] ? "" : "-") + std::to_string(i + 1);
    }
    r.add("assignment", lits);
  }
  if (!rt.agree) r.set_status(Status::fail);
}

void cmd_grid_certify(const Options& o, Report& r) {
  const grids::PeriodicPattern p = load_pattern(o, r);
  const grids::GridCertificate cert = grids::certify_pattern(p);
  r.add("pass", cert.pass);
  if (cert.failure) {
    if (const auto* d = std::get_if<grids::DominationFailure>(&*cert.failure)) {
      r.add("failure_type", "domination");
      r.add("failure_vertex", point(d->vertex));
      r.add("failure_value", d->domination);
    } else {
      const auto& pf = std::get<grids::PairFailure>(*cert.failure);
      r.add("failure_type", "pair");
      r.add("failure_vertex", point(pf.vertex));
      r.add("failure_displacement", point(pf.displacement));
      r.add("failure_value", pf.value);
    }
  }
  if (!cert.pass) r.set_status(Status::fail);
}

void cmd_grid_search(const Options& o, Report& r) {
  const grids::GridKind kind = grids::parse_grid_kind(o.grid);
  r.add("grid", std::string(grids::to_string(kind.name)));
  r.add("max_index", o.max_index);
  const auto best = grids::search_patterns(kind, o.max_index, o.jobs);
  r.add("found", best.has_value());
  if (!best) {
    r.set_status(Status::fail);
    return;
  }
  r.add("index", static_cast<long long>(best->lattice().index()));
  r.add("density", rational(grids::pattern_density(*best)));
  r.add("basis", point(best->basis1) + " " + point(best->basis2));
  for (grids::Point d : best->detectors) r.add("detector", point(d));
  if (!o.out.empty()) {
    std::ostringstream text;
    grids::write_pattern(text, *best);
    write_file(o.out, text.str());
    r.add("output", o.out);
  }
}

void cmd_grid_share(const Options& o, Report& r) {
  const grids::PeriodicPattern p = load_pattern(o, r);
  const bool pass = grids::certify_pattern(p).pass;
  r.add("pass", pass);
  if (!pass) {
    r.set_status(Status::fail);
    return;
  }
  grids::Rational sum(0), best(0);
  for (const grids::DetectorShare& s : grids::detector_shares(p)) {
    r.add("share", point(s.detector) + " " + rational(s.share));
    sum += s.share;
    best = std::max(best, s.share);
  }
  r.add("share_sum", rational(sum));
  r.add("max_share", rational(best));
}

void cmd_render(const Options& o, Report& r) {
  const grids::PeriodicPattern p = load_pattern(o, r);
  r.add("window", o.window);
  std::istringstream rows(grids::render_pattern(p, o.window));
  for (std::string line; std::getline(rows, line);) r.add("row", line);
}

struct Command {
  std::string name;
  std::string description;
  std::vector<std::string> flags;
  std::vector<std::string> required;
  Handler handler;
};

const std::vector<Command>& commands() {
  static const std::vector<Command> table = {
      {"verify", "check a detector set", {"graph", "set", "kind"}, {"graph", "set"}, cmd_verify},
      {"exists", "decide ERR:OLD existence", {"graph"}, {"graph"}, cmd_exists},
      {"solve", "minimum detector set", {"graph", "kind", "jobs", "budget", "out"}, {"graph"}, cmd_solve},
      {"decide", "is there a detector set of size <= k", {"graph", "kind", "k", "jobs", "budget"}, {"graph", "k"},
       cmd_decide},
      {"enumerate", "graphs on n vertices admitting a detector set", {"n", "m", "kind", "jobs", "out"}, {"n"},
       cmd_enumerate},
      {"expand", "quasi-cubic expansion at the first valid edge pair", {"graph", "out"}, {"graph"}, cmd_expand},
      {"reduce", "3-SAT to ERR:OLD instance", {"cnf", "out"}, {"cnf"}, cmd_reduce},
      {"gadget-check", "validate reduction gadgets", {"cnf", "graph"}, {"cnf"}, cmd_gadget_check},
      {"roundtrip", "compare satisfiability with the reduced instance", {"cnf", "jobs"}, {"cnf"}, cmd_roundtrip},
      {"grid-certify", "certify a periodic grid pattern", {"pattern"}, {"pattern"}, cmd_grid_certify},
      {"grid-search", "least-density periodic pattern", {"grid", "max-index", "jobs", "out"}, {"grid", "max-index"},
       cmd_grid_search},
      {"grid-share", "detector shares of a certified pattern", {"pattern"}, {"pattern"}, cmd_grid_share},
      {"render", "character rendering of a pattern", {"pattern", "window"}, {"pattern"}, cmd_render},
  };
  return table;
}

void add_flag(CLI::App& sub, const std::string& flag, Options& o) {
  const std::string name = "--" + flag;
  if (flag == "graph") sub.add_option(name, o.graph, "edge-list file");
  else if (flag == "set") sub.add_option(name, o.set, "detector-set file");
  else if (flag == "kind") sub.add_option(name, o.kind, "old, redold, detold or err")->check(CLI::IsMember({"old", "redold", "detold", "err"}));
  else if (flag == "k") sub.add_option(name, o.k, "size bound");
  else if (flag == "n") sub.add_option(name, o.n, "vertex count");
  else if (flag == "m") sub.add_option(name, o.m, "edge count");
  else if (flag == "cnf") sub.add_option(name, o.cnf, "DIMACS CNF file");
  else if (flag == "pattern") sub.add_option(name, o.pattern, "pattern file");
  else if (flag == "grid") sub.add_option(name, o.grid, "SQR, TRI or KNG")->check(CLI::IsMember({"SQR", "TRI", "KNG"}));
  else if (flag == "max-index") sub.add_option(name, o.max_index, "largest lattice index");
  else if (flag == "jobs") sub.add_option(name, o.jobs, "worker threads")->check(CLI::PositiveNumber);
  else if (flag == "budget") sub.add_option(name, o.budget, "node budget");
  else if (flag == "out") sub.add_option(name, o.out, "output path");
  else if (flag == "window") sub.add_option(name, o.window, "rendered width and height")->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("Detection-set toolkit for ERR:OLD and related systems", "errold");
  app.require_subcommand(1);
  Options o;
  std::map<const CLI::App*, const Command*> by_app;
  for (const Command& c : commands()) {
    CLI::App* sub = app.add_subcommand(c.name, c.description);
    for (const std::string& f : c.flags) add_flag(*sub, f, o);
    for (const std::string& f : c.required) sub->get_option("--" + f)->required();
    by_app[sub] = &c;
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help("", CLI::AppFormatMode::All) << "Commands:";
    for (const Command& c : commands()) err << ' ' << c.name;
    err << '\n';
    return kExitError;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  const Command& command = *by_app.at(chosen);
  Report report(command.name);
  std::string error;
  try {
    command.handler(o, report);
  } catch (const BudgetExhausted& e) {
    error = e.what();
    report.set_status(Status::error);
    report.add("error", error);
    if (e.best_bound()) report.add("best_bound", *e.best_bound());
  } catch (const std::exception& e) {
    error = e.what();
    report.set_status(Status::error);
    report.add("error", error);
  }
  report.write(out);
  switch (report.status()) {
    case Status::ok:
      return kExitOk;
    case Status::fail:
      return kExitFail;
    case Status::error:
      err << "error: " << command.name << ": " << error << '\n';
      return kExitError;
  }
  return kExitError;
}

}  // namespace errold::cli

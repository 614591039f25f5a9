// orient-augment: command-line front end. Exit codes: 0 yes/ok, 1 no/failed check, 2 usage or input error.
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "oa/cli_io.hpp"
#include "oa/face_analysis.hpp"
#include "oa/hardness_gen.hpp"
#include "oa/solvers.hpp"
#include "oa/strongconn.hpp"

using namespace oa;
using nlohmann::json;

namespace {

struct Options {
  std::string input, solution;
  int k = -1;
  std::string mode;
  std::uint64_t trials = 0;
  std::optional<std::uint64_t> seed;
  bool json = false;
  int oracle_limit = OracleLimits{}.max_vertices;
  int n = 0, m = 0;
  std::string witness_out;
};

std::uint64_t effective_seed(const Options& o) { return o.seed ? *o.seed : seed_from_env(kDefaultSeed); }

PlaneDigraph load(const std::string& path) { return parse_pog(read_text_file(path)); }

void print_witness_text(const PlaneDigraph& d, const Completion& x) {
  for (const NewArc& a : x) {
    const Face& f = d.face(a.face);
    std::cout << "arc face=" << a.face << " tail=" << f.vertex(a.tail) << "@" << a.tail << " head=" << f.vertex(a.head)
              << "@" << a.head << '\n';
  }
}

int report(const PlaneDigraph& d, const SolveReport& r, const Options& o, std::uint64_t seed) {
  if (o.json) {
    json j = report_to_json(d, r, o.k);
    j["seed"] = seed;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << (r.yes ? "yes" : "no");
    if (r.yes) std::cout << " size=" << r.optimum << (r.exact_optimum ? " (minimum)" : "");
    std::cout << " method=" << r.method << " seed=" << seed << '\n';
    if (r.yes) print_witness_text(d, r.witness);
  }
  return r.yes ? 0 : 1;
}

int cmd_solve(const Options& o) {
  PlaneDigraph d = load(o.input);
  PscaOptions opt;
  if (o.mode == "montecarlo") opt.mode = PscaMode::MonteCarlo;
  else if (!o.mode.empty() && o.mode != "exhaustive") throw Error(ErrorKind::UsageError, "--mode is exhaustive or montecarlo");
  opt.trials = o.trials;
  opt.seed = effective_seed(o);
  return report(d, solve_psca(d, o.k, opt), o, opt.seed);
}

int cmd_solve_directed(const Options& o) {
  PlaneDigraph d = load(o.input);
  return report(d, solve_directed(d, o.k), o, effective_seed(o));
}

int cmd_brute(const Options& o) {
  PlaneDigraph d = load(o.input);
  Mode mode = o.mode.empty() ? Mode::oriented : parse_mode(o.mode);
  if (mode == Mode::multi) throw Error(ErrorKind::UsageError, "--mode is oriented or directed");
  OracleLimits lim;
  lim.max_vertices = o.oracle_limit;
  lim.max_budget = std::max(lim.max_budget, o.k);
  return report(d, brute_solve(d, o.k, mode, lim), o, effective_seed(o));
}

int cmd_verify(const Options& o) {
  PlaneDigraph d = load(o.input);
  json j;
  try {
    j = json::parse(read_text_file(o.solution));
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, o.solution + ": " + e.what());
  }
  Mode mode = o.mode.empty() ? (d.mode() == Mode::multi ? Mode::directed : d.mode()) : parse_mode(o.mode);
  Completion x = completion_from_json(d, j);
  VerifyResult v = verify_solution(d, x, mode);
  if (o.json) {
    json out{{"ok", v.ok}, {"message", v.message}};
    out["error"] = v.error ? json(error_kind_name(*v.error)) : json(nullptr);
    std::cout << out.dump(2) << '\n';
  } else if (v.ok) {
    std::cout << "ok\n";
  } else {
    std::cout << "fail: " << (v.error ? "" : "NotStronglyConnected: ") << v.message << '\n';
  }
  return v.ok ? 0 : 1;
}

int cmd_condense(const Options& o) {
  PlaneDigraph d = load(o.input);
  CondensationResult c = condense(d);
  if (o.json) {
    std::cout << json{{"pog", write_pog(c.condensed)}, {"vertex_map", c.vertex_map}}.dump(2) << '\n';
  } else {
    std::cout << write_pog(c.condensed);
  }
  return 0;
}

int cmd_stats(const Options& o) {
  PlaneDigraph d = load(o.input);
  Classification cls = classify_all(d);
  const Census& c = cls.census;
  if (o.json) {
    json faces = json::array();
    for (const FaceAnalysis& fa : cls.faces)
      faces.push_back({{"face", fa.face},
                       {"size", d.face(fa.face).size()},
                       {"kind", face_kind_name(fa.cls.kind)},
                       {"lt", fa.cls.lt},
                       {"dipaths", fa.dipaths.size()}});
    std::cout << json{{"vertices", d.vertex_count()},
                      {"arcs", d.arc_count()},
                      {"faces", faces},
                      {"components", cls.scc.count},
                      {"sources", cls.scc.source_count()},
                      {"sinks", cls.scc.sink_count()},
                      {"census",
                       {{"two_arcs", c.two_arcs},
                        {"sum_lt", c.sum_lt},
                        {"sum_lt_angles", c.sum_lt_angles},
                        {"sum_nonlocal", c.sum_nonlocal},
                        {"terminals", c.terminals},
                        {"alternating_lt", c.alternating_lt},
                        {"identity_holds", c.identity_holds()}}}}
                     .dump(2)
              << '\n';
    return 0;
  }
  std::cout << "vertices " << d.vertex_count() << "\narcs " << d.arc_count() << "\nfaces " << d.face_count()
            << "\ncomponents " << cls.scc.count << "\nsources " << cls.scc.source_count() << "\nsinks "
            << cls.scc.sink_count() << "\n\nface size kind lt dipaths\n";
  for (const FaceAnalysis& fa : cls.faces)
    std::cout << fa.face << ' ' << d.face(fa.face).size() << ' ' << face_kind_name(fa.cls.kind) << ' ' << fa.cls.lt << ' '
              << fa.dipaths.size() << '\n';
  std::cout << "\n2|A| " << c.two_arcs << "\nsum_lt " << c.sum_lt << "\nsum_lt_angles " << c.sum_lt_angles
            << "\nsum_nonlocal " << c.sum_nonlocal << "\nterminals " << c.terminals << "\nalternating_lt "
            << c.alternating_lt << "\nidentity " << (c.identity_holds() ? "holds" : "FAILS") << '\n';
  return 0;
}

int cmd_gen_hard(const Options& o) {
  PlanarCnf f = parse_dimacs(read_text_file(o.input));
  Reduction r = reduce(f);
  auto a = f.variables <= 24 ? find_assignment(f) : std::nullopt;
  std::optional<Completion> w;
  if (a) w = assignment_to_augmentation(r, *a);
  if (!o.witness_out.empty()) {
    if (!w) throw Error(ErrorKind::AssignmentDoesNotSatisfy, "formula is unsatisfiable, no witness written");
    write_text_file(o.witness_out, completion_to_json(r.gadget.graph, *w).dump(2) + "\n");
  }
  if (o.json) {
    json j{{"pog", write_pog(r.gadget.graph)},
           {"padding_clauses", r.padding_clauses},
           {"satisfiable", a.has_value()},
           {"vertices", r.gadget.graph.vertex_count()}};
    j["witness"] = w ? completion_to_json(r.gadget.graph, *w) : json(nullptr);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << write_pog(r.gadget.graph);
  }
  return 0;
}

int cmd_gen_random(const Options& o) {
  Mode mode = o.mode.empty() ? Mode::oriented : parse_mode(o.mode);
  std::cout << write_pog(gen_random(o.n, o.m, effective_seed(o), mode));
  return 0;
}

int cmd_export_dot(const Options& o) {
  PlaneDigraph d = load(o.input);
  Completion x;
  if (!o.solution.empty()) {
    try {
      x = completion_from_json(d, json::parse(read_text_file(o.solution)));
    } catch (const json::parse_error& e) {
      throw Error(ErrorKind::ParseError, o.solution + ": " + e.what());
    }
  }
  std::cout << export_dot(d, x);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strong connectivity augmentation of plane digraphs"};
  app.require_subcommand(1);
  Options o;
  std::uint64_t seed_value = 0;

  auto add_common = [&](CLI::App* s) {
    s->add_flag("--json", o.json, "JSON output");
    s->add_option("--seed", seed_value, "random seed (default: $ORIENT_AUGMENT_SEED or built-in)")
        ->each([&](const std::string&) { o.seed = seed_value; });
  };
  auto add_k = [&](CLI::App* s) { s->add_option("-k", o.k, "budget")->required()->check(CLI::NonNegativeNumber); };
  auto add_input = [&](CLI::App* s, const char* what) { s->add_option("input", o.input, what)->required(); };

  auto* solve = app.add_subcommand("solve", "PSCA on a plane oriented graph");
  add_input(solve, ".pog file");
  add_k(solve);
  solve->add_option("--mode", o.mode, "exhaustive | montecarlo");
  solve->add_option("--trials", o.trials, "Monte-Carlo trials per branch (0 = default)");
  add_common(solve);

  auto* solve_dir = app.add_subcommand("solve-directed", "Directed-PSCA (digons allowed)");
  add_input(solve_dir, ".pog file");
  add_k(solve_dir);
  add_common(solve_dir);

  auto* brute = app.add_subcommand("brute", "exhaustive oracle for small instances");
  add_input(brute, ".pog file");
  add_k(brute);
  brute->add_option("--mode", o.mode, "oriented | directed");
  brute->add_option("--oracle-limit", o.oracle_limit, "largest vertex count the oracle accepts");
  add_common(brute);

  auto* verify = app.add_subcommand("verify", "check a completion");
  add_input(verify, ".pog file");
  verify->add_option("solution", o.solution, "JSON witness")->required();
  verify->add_option("--mode", o.mode, "oriented | directed");
  add_common(verify);

  auto* cond = app.add_subcommand("condense", "contract strong components, keeping the embedding");
  add_input(cond, ".pog file");
  add_common(cond);

  auto* stats = app.add_subcommand("stats", "face classes and angle census");
  add_input(stats, ".pog file");
  add_common(stats);

  auto* hard = app.add_subcommand("gen-hard", "instance from a planar 3-CNF (extended DIMACS)");
  add_input(hard, "DIMACS file with rotv/rotc lines");
  hard->add_option("--witness", o.witness_out, "write the assignment witness here");
  add_common(hard);

  auto* rnd = app.add_subcommand("gen-random", "random connected plane graph");
  rnd->add_option("-n", o.n, "vertices")->required();
  rnd->add_option("-m", o.m, "arcs")->required();
  rnd->add_option("--mode", o.mode, "oriented | directed");
  add_common(rnd);

  auto* dot = app.add_subcommand("export-dot", "Graphviz output");
  add_input(dot, ".pog file");
  dot->add_option("solution", o.solution, "optional JSON witness");
  add_common(dot);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*solve) return cmd_solve(o);
    if (*solve_dir) return cmd_solve_directed(o);
    if (*brute) return cmd_brute(o);
    if (*verify) return cmd_verify(o);
    if (*cond) return cmd_condense(o);
    if (*stats) return cmd_stats(o);
    if (*hard) return cmd_gen_hard(o);
    if (*rnd) return cmd_gen_random(o);
    if (*dot) return cmd_export_dot(o);
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
  return 2;
}

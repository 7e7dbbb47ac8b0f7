// Command-line front end for the budgeted cluster-editing solver.
//
// Subcommands:
//   solve   decide an instance file, optionally printing the edit and trace
//   oracle  brute-force decision for small instances (at most 14 vertices)
//   verify  check a certificate file against an instance file
//   gen     emit a named, random, or planted instance file
//   xcheck  random solver-vs-oracle agreement sweep
//
// Exit codes: 0 = YES (or plain success), 1 = NO or failed verification,
// 2 = bad input, 3 = usage or internal invariant errors.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <cep11/core.hpp>
#include <cep11/generators.hpp>
#include <cep11/io.hpp>
#include <cep11/oracle.hpp>
#include <cep11/pipeline.hpp>

namespace {

using namespace cep11;

Instance load_instance(const std::string& path) {
  if (path == "-") return parse_instance(std::cin);
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return parse_instance(in);
}

EditSolution load_certificate(const std::string& path, long long n_vertices) {
  if (path == "-") return parse_certificate(std::cin, n_vertices);
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return parse_certificate(in, n_vertices);
}

int run_solve(const std::string& file, bool print_certificate, bool print_trace,
              bool decision_only) {
  Instance g = load_instance(file);
  SolveOptions opts;
  opts.want_certificate = !decision_only;
  opts.want_trace = print_trace;
  Verdict v = solve(g, opts);
  std::cout << (v.answer ? "YES" : "NO") << "\n";
  if (print_trace)
    for (const ReductionStep& step : v.trace)
      std::cout << "c step " << step_name(step) << "\n";
  if (v.answer && print_certificate) serialize_certificate(*v.certificate, std::cout);
  return v.answer ? 0 : 1;
}

int run_oracle(const std::string& file) {
  Instance g = load_instance(file);
  if (g.num_vertices() > kOracleMaxVertices)
    throw InputError("oracle accepts at most " +
                     std::to_string(kOracleMaxVertices) + " vertices; got " +
                     std::to_string(g.num_vertices()));
  const bool yes = oracle_decide(g);
  std::cout << (yes ? "YES" : "NO") << "\n";
  return yes ? 0 : 1;
}

int run_verify(const std::string& file, const std::string& certfile) {
  Instance g = load_instance(file);
  EditSolution sol = load_certificate(certfile, g.num_vertices());
  const std::string flaw = verify_solution(g, sol);
  if (flaw.empty()) {
    std::cout << "OK\n";
    return 0;
  }
  std::cout << flaw << "\n";
  return 1;
}

int run_gen(const std::string& kind, const std::string& name, int n, double p,
            std::uint64_t seed) {
  Instance g;
  std::string comment;
  if (kind == "named") {
    if (name.empty()) throw UsageError("gen --kind named requires --name");
    g = gen_named(name);
    comment = "named instance: " + name;
  } else if (kind == "random") {
    if (n < 0) throw UsageError("gen --kind random requires --n");
    g = gen_random(n, p, seed, /*random_budgets=*/true);
    comment = "random instance: n=" + std::to_string(n) +
              " p=" + std::to_string(p) + " seed=" + std::to_string(seed);
  } else {  // planted
    if (n < 0) throw UsageError("gen --kind planted requires --n");
    g = gen_planted(n, seed);
    comment = "planted YES instance: n=" + std::to_string(n) +
              " seed=" + std::to_string(seed);
  }
  serialize_instance(g, std::cout, comment);
  return 0;
}

int run_xcheck(int n_max, int samples, std::uint64_t seed) {
  Rng rng(seed);
  int yes = 0;
  for (int it = 0; it < samples; ++it) {
    const int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n_max)));
    const double p = 0.1 + 0.1 * static_cast<double>(rng.below(5));
    Instance g = gen_random(n, p, rng.next_u64(), /*random_budgets=*/true);
    const bool expect = oracle_decide(g);
    Verdict v = solve(g);
    if (v.answer != expect) {
      std::ostringstream culprit;
      serialize_instance(g, culprit, "solver/oracle disagreement");
      std::cerr << culprit.str();
      throw InternalError("xcheck: solver says " +
                          std::string(v.answer ? "YES" : "NO") +
                          ", oracle says " + (expect ? "YES" : "NO"));
    }
    if (v.answer) {
      const std::string flaw = verify_solution(g, *v.certificate);
      if (!flaw.empty()) throw InternalError("xcheck: bad certificate: " + flaw);
      ++yes;
    }
  }
  std::cout << "xcheck: " << samples << " instances with at most " << n_max
            << " vertices: " << yes << " YES, " << (samples - yes)
            << " NO, solver and oracle agree\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Budgeted cluster editing: decide whether deleting one matching of "
      "edges and adding one matching of non-edges, within per-vertex 0/1 "
      "budgets, can turn the graph into disjoint cliques."};
  app.require_subcommand(1);

  std::string file, certfile, kind, name;
  bool print_certificate = false, print_trace = false, decision_only = false;
  int n = -1, n_max = 10, samples = 200;
  double p = 0.5;
  std::uint64_t seed = 1;

  CLI::App* cmd_solve =
      app.add_subcommand("solve", "decide an instance file");
  cmd_solve->add_option("file", file, "instance file, or '-' for stdin")
      ->required();
  CLI::Option* opt_cert = cmd_solve->add_flag(
      "--certificate", print_certificate, "print the edit as 'd u v' / 'a u v' lines");
  cmd_solve->add_flag("--trace", print_trace,
                      "print one 'c step <name>' line per rewriting step");
  cmd_solve
      ->add_flag("--decision-only", decision_only,
                 "skip certificate construction for speed")
      ->excludes(opt_cert);

  CLI::App* cmd_oracle =
      app.add_subcommand("oracle", "brute-force decision (at most 14 vertices)");
  cmd_oracle->add_option("file", file, "instance file, or '-' for stdin")
      ->required();

  CLI::App* cmd_verify =
      app.add_subcommand("verify", "check a certificate against an instance");
  cmd_verify->add_option("file", file, "instance file")->required();
  cmd_verify->add_option("certfile", certfile, "certificate file, or '-' for stdin")
      ->required();

  CLI::App* cmd_gen = app.add_subcommand("gen", "emit an instance file");
  cmd_gen->add_option("--kind", kind, "named | random | planted")
      ->required()
      ->check(CLI::IsMember({"named", "random", "planted"}));
  cmd_gen->add_option("--name", name, "named graph (k13, k14, k23, c4, c5, p4, cube, petersen, h-graph)");
  cmd_gen->add_option("--n", n, "vertex count (random, planted)");
  cmd_gen->add_option("--p", p, "edge probability (random)")
      ->check(CLI::Range(0.0, 1.0));
  cmd_gen->add_option("--seed", seed, "generator seed");

  CLI::App* cmd_xcheck =
      app.add_subcommand("xcheck", "random solver-vs-oracle agreement sweep");
  cmd_xcheck->add_option("--n-max", n_max, "largest instance size")
      ->check(CLI::Range(1, 14));
  cmd_xcheck->add_option("--samples", samples, "number of instances")
      ->check(CLI::PositiveNumber);
  cmd_xcheck->add_option("--seed", seed, "sweep seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  }

  try {
    if (cmd_solve->parsed())
      return run_solve(file, print_certificate, print_trace, decision_only);
    if (cmd_oracle->parsed()) return run_oracle(file);
    if (cmd_verify->parsed()) return run_verify(file, certfile);
    if (cmd_gen->parsed()) return run_gen(kind, name, n, p, seed);
    return run_xcheck(n_max, samples, seed);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}

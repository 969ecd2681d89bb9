#include "cgadg/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <ostream>

#include "cgadg/bench.hpp"
#include "cgadg/branch_prune.hpp"
#include "cgadg/errors.hpp"
#include "cgadg/instance.hpp"
#include "cgadg/io.hpp"
#include "cgadg/oracle.hpp"

namespace cgadg {
namespace {

// Thrown for bad input that should end the run with status 2.
struct UsageError : Error {
  using Error::Error;
};

double default_eps() {
  const char* env = std::getenv("CGADG_EPS");
  if (!env || !*env) return kDefaultPruneEps;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (*end != '\0' || !(v > 0.0)) throw UsageError(std::string("CGADG_EPS: not a positive number: ") + env);
  return v;
}

Instance load_instance(const std::string& path) {
  try {
    return parse_instance(read_text_file(path));
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

Realization load_realization(const std::string& path) {
  try {
    return parse_realization(read_text_file(path));
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::string numbered_path(const std::string& out, std::size_t k) {
  const std::filesystem::path p(out);
  std::filesystem::path name = p.stem();
  name += "_" + std::to_string(k);
  name += p.extension();
  return (p.parent_path() / name).string();
}

struct SolveArgs {
  std::string instance;
  bool all = false;
  double eps = 0.0;
  std::size_t max_solutions = 0;
  bool symmetric = false;
  bool parallel = false;
  std::string out;
};

int do_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  const Instance inst = load_instance(a.instance);
  if (inst.n() < 4) throw UsageError(a.instance + ": needs at least 4 vertices");
  if (const auto report = validate_instance(inst); !report.is_dmdgp) {
    err << a.instance << ": " << report.summary() << "\n";
    return kExitUsage;
  }
  SolveOptions opts;
  opts.eps = a.eps;
  opts.mode = a.all ? SearchMode::AllSolutions : SearchMode::FirstSolution;
  if (a.max_solutions > 0) {
    opts.mode = SearchMode::AllSolutions;
    opts.max_solutions = a.max_solutions;
  }
  opts.use_symmetry = a.symmetric;
  opts.parallel = a.parallel;

  const auto solutions = solve(inst, opts);
  out << "solutions: " << solutions.size() << "\n";
  for (std::size_t k = 0; k < solutions.size(); ++k) {
    const auto& s = solutions[k];
    const std::string text = format_realization(s.realization, "path " + s.path.to_string());
    if (a.out.empty()) {
      out << "# solution " << k + 1 << "\n" << text;
    } else {
      const std::string path = opts.mode == SearchMode::FirstSolution ? a.out : numbered_path(a.out, k + 1);
      write_text_file(path, text);
    }
  }
  return solutions.empty() ? kExitNoSolution : kExitOk;
}

struct GenerateArgs {
  int n = 0;
  std::uint64_t seed = 0;
  double extra_edges = 0.0;
  std::string out;
  std::string truth;
};

int do_generate(const GenerateArgs& a, std::ostream& out) {
  GeneratedInstance g;
  try {
    g = generate_instance(a.n, a.seed, a.extra_edges);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  write_text_file(a.out, format_instance(g.instance));
  if (!a.truth.empty()) write_text_file(a.truth, format_realization(g.truth));
  out << "wrote " << a.out << " (n=" << g.instance.n() << ", m=" << g.instance.edge_count() << ")\n";
  return kExitOk;
}

struct VerifyArgs {
  std::string instance;
  std::string realization;
  double eps = 0.0;
};

int do_verify(const VerifyArgs& a, std::ostream& out) {
  const Instance inst = load_instance(a.instance);
  const Realization r = load_realization(a.realization);
  if (r.size() != inst.n()) {
    throw UsageError(a.realization + ": " + std::to_string(r.size()) + " points for " + std::to_string(inst.n()) +
                     " vertices");
  }
  const auto v = verify_realization(inst, r);
  char buf[160];
  std::snprintf(buf, sizeof buf, "max violation: %.6g\nworst edge: %d %d\n", v.max_violation, v.worst_edge.u,
                v.worst_edge.v);
  out << buf;
  const bool ok = v.max_violation <= a.eps;
  out << (ok ? "ok" : "violated") << "\n";
  return ok ? kExitOk : kExitNoSolution;
}

struct BenchArgs {
  long count = 100000;
  std::uint64_t seed = 1;
};

int do_bench(const BenchArgs& a, std::ostream& out) {
  const std::vector<BenchReport> reports{bench_compose(a.count, a.seed), bench_placement(a.count, a.seed)};
  out << format_report_text(reports) << "\n" << format_report_kv(reports);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"DMDGP Branch & Prune with conformal placement", "cgadg"};
  app.require_subcommand(1);

  double eps = 0.0;
  try {
    eps = default_eps();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  SolveArgs solve_args;
  solve_args.eps = eps;
  auto* solve_cmd = app.add_subcommand("solve", "enumerate realizations of an instance");
  solve_cmd->add_option("instance", solve_args.instance, "instance file")->required();
  solve_cmd->add_flag("--all", solve_args.all, "all solutions instead of the first");
  solve_cmd->add_option("--eps", solve_args.eps, "pruning tolerance")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--max-solutions", solve_args.max_solutions, "stop after K solutions")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_flag("--symmetric", solve_args.symmetric, "first solution, then partial reflections");
  solve_cmd->add_flag("--parallel", solve_args.parallel, "multi-threaded search");
  solve_cmd->add_option("--out", solve_args.out, "output file; several solutions go to NAME_k.EXT");

  GenerateArgs gen_args;
  auto* gen_cmd = app.add_subcommand("generate", "random backbone-like instance");
  gen_cmd->add_option("--n", gen_args.n, "vertex count")->required();
  gen_cmd->add_option("--seed", gen_args.seed, "random seed")->required();
  gen_cmd->add_option("--extra-edges", gen_args.extra_edges, "fraction of non-clique pairs kept")
      ->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--out", gen_args.out, "instance file")->required();
  gen_cmd->add_option("--truth", gen_args.truth, "ground-truth realization file");

  VerifyArgs verify_args;
  verify_args.eps = eps;
  auto* verify_cmd = app.add_subcommand("verify", "check a realization against an instance");
  verify_cmd->add_option("instance", verify_args.instance, "instance file")->required();
  verify_cmd->add_option("realization", verify_args.realization, "realization file")->required();
  verify_cmd->add_option("--eps", verify_args.eps, "tolerance")->check(CLI::PositiveNumber);

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "motor versus matrix timings");
  bench_cmd->add_option("--count", bench_args.count, "iterations")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bench_args.seed, "random seed");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve_cmd->parsed()) return do_solve(solve_args, out, err);
    if (gen_cmd->parsed()) return do_generate(gen_args, out);
    if (verify_cmd->parsed()) return do_verify(verify_args, out);
    return do_bench(bench_args, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace cgadg

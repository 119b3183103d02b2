#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "subcons/bench.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitVerifyFail = 3;

using subcons::InstanceSpec;
using subcons::ResultRow;
using subcons::RunConfig;

struct GenArgs {
  std::string kind;
  int n = 10;
  std::uint64_t seed = 1;
  std::string out = "instance.json";
  double alpha = -1.0;
  double kappa = -1.0;
  double x = -1.0;
  int beta = -1;
  int alpha_int = -1;
  std::vector<double> budget_frac;
  std::vector<double> cover_frac;
};

int cmd_gen(const GenArgs& args) {
  nlohmann::json params = nlohmann::json::object();
  if (args.kind == "speech-sat" && args.alpha > 0.0) params["alpha"] = args.alpha;
  if (args.kind == "hardness-pair") {
    if (args.kappa >= 0.0) params["kappa"] = args.kappa;
    if (args.x > 0.0) params["x"] = args.x;
    if (args.alpha_int > 0) params["alpha"] = args.alpha_int;
    if (args.beta > 0) params["beta"] = args.beta;
  }
  if (!args.budget_frac.empty()) params["budget_frac"] = args.budget_frac.front();
  if (!args.cover_frac.empty()) params["cover_frac"] = args.cover_frac.front();
  InstanceSpec spec = subcons::gen_instance(args.kind, args.n, args.seed, params);
  subcons::save_instance(spec, args.out);
  std::cout << "wrote " << args.out << "\n";
  return kExitOk;
}

struct SolveArgs {
  std::string instance;
  std::vector<std::string> algos;
  std::vector<double> budget_frac;
  std::vector<double> cover_frac;
  std::string out = "results.json";
  std::string format = "json";
  std::uint64_t seed = 0;
  bool have_seed = false;
  subcons::SolverParams params;
};

int cmd_solve(const SolveArgs& args) {
  RunConfig config;
  config.instance = subcons::load_instance(args.instance);
  if (args.have_seed) config.instance.seed = args.seed;
  config.instance_id = args.instance;
  config.algorithms = args.algos;
  config.params = args.params;

  const int n = config.instance.n;
  if (!args.cover_frac.empty() || !args.budget_frac.empty()) {
    const bool cover = config.instance.is_cover();
    const auto& fracs = cover ? args.cover_frac : args.budget_frac;
    if (fracs.empty()) {
      throw subcons::ParameterError(
          cover ? "cover instance needs --cover-frac" : "budget instance needs --budget-frac");
    }
    const double total = cover ? config.instance.g->eval(subcons::Subset::full(n))
                               : config.instance.f->eval(subcons::Subset::full(n));
    for (double frac : fracs) config.bounds.push_back(frac * total);
  } else {
    config.bounds.push_back(config.instance.is_cover() ? *config.instance.cover
                                                       : *config.instance.budget);
  }

  std::vector<ResultRow> rows = subcons::run_solve(config);
  subcons::write_results(rows, args.out, args.format);
  int failed = 0;
  for (const ResultRow& r : rows) failed += r.error.empty() ? 0 : 1;
  std::cout << "wrote " << rows.size() << " rows to " << args.out;
  if (failed > 0) std::cout << " (" << failed << " rows recorded an error)";
  std::cout << "\n";
  return kExitOk;
}

struct VerifyArgs {
  std::string instance;
  int trials = 200;
};

int cmd_verify(const VerifyArgs& args) {
  InstanceSpec spec = subcons::load_instance(args.instance);
  subcons::VerifyReport report = subcons::run_verify(spec, args.trials);
  for (const std::string& line : report.lines) std::cout << line << "\n";
  return report.ok ? kExitOk : kExitVerifyFail;
}

struct ReportArgs {
  std::vector<std::string> results;
  std::string out = "report.csv";
  std::string plot = "plot.json";
};

int cmd_report(const ReportArgs& args) {
  std::vector<ResultRow> rows;
  for (const std::string& path : args.results) {
    std::vector<ResultRow> part = subcons::read_results(path);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  subcons::write_report(std::move(rows), args.out, args.plot);
  std::cout << "wrote " << args.out << " and " << args.plot << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Submodular cover / knapsack solver harness"};
  app.require_subcommand(1);

  GenArgs gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a synthetic instance");
  gen_cmd->add_option("--kind", gen.kind,
                      "speech-like | speech-sat | modular-pair | hardness-pair")
      ->required();
  gen_cmd->add_option("--n", gen.n, "ground set size")->required();
  gen_cmd->add_option("--seed", gen.seed, "generator seed");
  gen_cmd->add_option("--out", gen.out, "output instance path");
  gen_cmd->add_option("--alpha", gen.alpha, "saturation fraction (speech-sat)");
  gen_cmd->add_option("--kappa", gen.kappa, "hardness curvature");
  gen_cmd->add_option("--x", gen.x, "hardness scale parameter");
  gen_cmd->add_option("--hardness-alpha", gen.alpha_int, "hardness alpha override");
  gen_cmd->add_option("--beta", gen.beta, "hardness beta override");
  gen_cmd->add_option("--budget-frac", gen.budget_frac, "budget as a fraction of f(V)")
      ->delimiter(',');
  gen_cmd->add_option("--cover-frac", gen.cover_frac, "cover as a fraction of g(V)")
      ->delimiter(',');

  SolveArgs solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Run solvers over a bound sweep");
  solve_cmd->add_option("--instance", solve.instance, "instance JSON path")->required();
  solve_cmd->add_option("--algo", solve.algos, "solver tags")->required()->delimiter(',');
  solve_cmd->add_option("--budget-frac", solve.budget_frac, "budget sweep, fractions of f(V)")
      ->delimiter(',');
  solve_cmd->add_option("--cover-frac", solve.cover_frac, "cover sweep, fractions of g(V)")
      ->delimiter(',');
  solve_cmd->add_option("--out", solve.out, "result file path");
  solve_cmd->add_option("--format", solve.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  CLI::Option* seed_opt = solve_cmd->add_option("--seed", solve.seed, "baseline seed override");
  solve_cmd->add_option("--eps", solve.params.eps, "search granularity");
  solve_cmd->add_option("--max-iters", solve.params.max_iters, "iteration cap");
  solve_cmd
      ->add_option_function<std::string>(
          "--enumeration",
          [&](const std::string& v) {
            solve.params.enumeration =
                v == "triples" ? subcons::Enumeration::triples : subcons::Enumeration::none;
          },
          "none | triples")
      ->check(CLI::IsMember({"none", "triples"}));
  solve_cmd
      ->add_option_function<std::string>(
          "--bound-variant",
          [&](const std::string& v) {
            solve.params.variant =
                v == "m1" ? subcons::BoundVariant::m1 : subcons::BoundVariant::m2;
          },
          "m1 | m2")
      ->check(CLI::IsMember({"m1", "m2"}));

  VerifyArgs verify;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Property and certificate checks");
  verify_cmd->add_option("--instance", verify.instance, "instance JSON path")->required();
  verify_cmd->add_option("--trials", verify.trials, "sample count for large-n checks");

  ReportArgs report;
  CLI::App* report_cmd = app.add_subcommand("report", "Merge results into CSV + plot data");
  report_cmd->add_option("results", report.results, "result JSON files")->required();
  report_cmd->add_option("--out", report.out, "CSV output path");
  report_cmd->add_option("--plot", report.plot, "plot-data JSON output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen);
    if (*solve_cmd) {
      solve.have_seed = seed_opt->count() > 0;
      return cmd_solve(solve);
    }
    if (*verify_cmd) return cmd_verify(verify);
    if (*report_cmd) return cmd_report(report);
  } catch (const subcons::InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

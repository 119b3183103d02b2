#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "subcons/instance.hpp"
#include "subcons/report.hpp"
#include "subcons/solvers.hpp"

namespace subcons {

// Shared knobs forwarded to the individual solvers.
struct SolverParams {
  BoundVariant variant = BoundVariant::m2;
  Enumeration enumeration = Enumeration::none;
  int max_iters = 50;
  double eps = 0.05;
};

// Runs the tagged solver on the instance with its bound replaced by `bound`.
// Tags: brute_force, ssc_greedy, issc, eassc, eassc_c (cover instances);
// brute_force, sk_greedy, gr, isk, isk_type1, eask, eask_c (budget instances).
SolveReport dispatch_solver(const std::string& tag, const InstanceSpec& inst,
                            double bound, const SolverParams& params);

struct ResultRow {
  std::string instance_id;
  std::uint64_t seed = 0;
  std::string algorithm;
  std::string bound_kind;  // "cover" or "budget"
  double bound_value = 0.0;
  double f_value = 0.0;
  double g_value = 0.0;
  bool feasible = false;
  int iterations = 0;
  std::int64_t wall_time_ns = 0;
  double sigma = 1.0;
  double rho = 1.0;
  std::optional<double> brute_force_opt;
  std::string error;  // nonempty when the solver failed; other fields zeroed
};

struct RunConfig {
  InstanceSpec instance;
  std::string instance_id = "instance";
  std::vector<std::string> algorithms;
  SolverParams params;
  // Absolute bound values to sweep; must be nonempty and within the valid
  // range for the instance's bound kind.
  std::vector<double> bounds;
  int baseline_draws = 100;
  bool with_baseline = true;
};

// Runs every (algorithm, bound) pair plus a random baseline row per solver
// row (uniform sets of the solver's cardinality, mean over baseline_draws).
// Per-row errors are recorded in the row; the run continues. Worker count is
// capped by the SUBCONS_THREADS environment variable.
std::vector<ResultRow> run_solve(const RunConfig& config);

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> lines;  // "PASS ..."/"FAIL ..." per check
};

// Property checks plus solver-vs-brute-force certificate assertions; n <= 16.
VerifyReport run_verify(const InstanceSpec& inst, int trials);

// Seeded synthetic instance generators. Kinds: speech-like, speech-sat,
// modular-pair, hardness-pair. Extra knobs arrive via `params` (JSON object);
// unknown keys are rejected.
InstanceSpec gen_instance(const std::string& kind, int n, std::uint64_t seed,
                          const nlohmann::json& params);

// Result serialization. JSON files hold {"rows": [...]}; CSV is one header
// line plus one line per row, '.' decimal, 17 significant digits.
void write_results(const std::vector<ResultRow>& rows, const std::string& path,
                   const std::string& format);
std::vector<ResultRow> read_results(const std::string& path);
std::string results_to_csv(const std::vector<ResultRow>& rows);
nlohmann::json results_to_json(const std::vector<ResultRow>& rows);

// Merges result files into a tidy CSV plus a plot-data JSON of per-algorithm
// series (x = bound value, y = g_value and f_value), sorted by
// (instance, algorithm, bound).
void write_report(std::vector<ResultRow> rows, const std::string& csv_path,
                  const std::string& plot_path);

}  // namespace subcons

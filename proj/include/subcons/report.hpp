#pragma once

#include <optional>
#include <string>
#include <vector>

#include "subcons/subset.hpp"

namespace subcons {

// Quantities entering the guarantee formulas, present where applicable.
struct CertIngredients {
  std::optional<double> H_g;
  std::optional<double> K_g;
  std::optional<double> K_f;
  std::optional<double> k_f;
  std::optional<double> kappa_f;
  std::optional<double> kappa_g;
  // Budget/cover the guarantee is stated against when it differs from the
  // input (ISK's shrunk/inflated budget).
  std::optional<double> reference_bound;
  bool estimated = false;            // K/k obtained by greedy estimation
  bool nonintegral_Hg = false;       // H_g from the ln-based fallback
  bool relative_to_weights = false;  // EA factors hold w.r.t. supplied weights
};

struct GuaranteeCert {
  std::string algorithm;
  double sigma = 1.0;  // cost/budget-side factor, >= 1
  double rho = 1.0;    // cover/objective-side factor, <= 1
  CertIngredients ingredients;
};

struct TraceEntry {
  int iteration = 0;
  std::string surrogate;
  double f_value = 0.0;
  double g_value = 0.0;
};

struct SolveReport {
  Subset solution;
  double f_value = 0.0;
  double g_value = 0.0;
  bool feasible = false;
  std::string feasible_note;
  int iterations = 0;
  std::vector<TraceEntry> trace;
  GuaranteeCert certificate;
};

}  // namespace subcons

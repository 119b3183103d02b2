#pragma once

#include <span>
#include <vector>

#include "subcons/bounds.hpp"
#include "subcons/oracle.hpp"
#include "subcons/report.hpp"

namespace subcons {

enum class BoundVariant { m1, m2 };
enum class Enumeration { none, triples };
enum class IskMode { feasible, type1 };

// Harmonic set-cover factor. Integral g (all singletons within tolerance of
// integers) gives H(floor(max_j g(j))); otherwise the flagged ln-based bound
// 1 + ln(g(V) / 1e-9).
struct CoverFactor {
  double value = 1.0;
  bool integral = true;
};
CoverFactor cover_factor(const SetFunction& g);

// Extremal feasible cardinalities from the guarantee formulas. Exact by
// enumeration for n <= 16 (or by sorting when the function is modular);
// greedy estimates, flagged, above that.
struct CardinalityEstimate {
  int value = 0;
  bool estimated = false;
};
CardinalityEstimate max_card_below_cover(const SetFunction& g, double c);    // K_g - 1
CardinalityEstimate max_card_within_budget(const SetFunction& f, double b);  // K_f
CardinalityEstimate min_maximal_card(const SetFunction& f, double b);        // k_f

// --- SSC / SK: modular-cost special cases -----------------------------------

// Wolsey's greedy for min w(X) s.t. g(X) >= c; certificate sigma = H_g.
SolveReport ssc_greedy(std::span<const double> f_weights, const SetFunction& g,
                       double c);
SolveReport ssc_greedy(const ModularOracle& f, const SetFunction& g, double c);

// Cost-ratio greedy for max g(X) s.t. w(X) <= b. Enumeration::none compares
// against the best feasible singleton (rho = (1 - 1/e)/2); Enumeration::triples
// runs the O(n^3) partial-enumeration restarts (rho = 1 - 1/e).
SolveReport sk_greedy(std::span<const double> f_weights, const SetFunction& g,
                      double b, Enumeration enumeration = Enumeration::none);
SolveReport sk_greedy(const ModularOracle& f, const SetFunction& g, double b,
                      Enumeration enumeration = Enumeration::none);

// --- General SCSC -------------------------------------------------------------

// Majorize-minimize: replace f by a modular upper bound at the incumbent and
// solve SSC, keeping iterates only while true f strictly improves.
SolveReport issc(const SetFunction& f, const SetFunction& g, double c,
                 BoundVariant variant = BoundVariant::m2, int max_iters = 50);

// EA parametric sweep over the cover constraint.
SolveReport eassc(const SetFunction& f, const SetFunction& g, double c,
                  const std::vector<double>& ea_weights, int lambda_grid_size = 32);

// Fully curved shortcut: single SSC call on the squared surrogate weights.
SolveReport eassc_c(const SetFunction& f, const SetFunction& g, double c,
                    const std::vector<double>& ea_weights);

// --- General SCSK --------------------------------------------------------------

// Cost-blind greedy on g gains under true-f feasibility.
SolveReport gr(const SetFunction& f, const SetFunction& g, double b);

// Iterated SK on modular upper bounds of f; ascent in true g.
SolveReport isk(const SetFunction& f, const SetFunction& g, double b,
                BoundVariant variant = BoundVariant::m2, int max_iters = 50,
                IskMode mode = IskMode::feasible,
                Enumeration enumeration = Enumeration::triples);

// Fully curved shortcut: one SK call with budget b^2 on the squared weights.
SolveReport eask_c(const SetFunction& f, const SetFunction& g, double b,
                   const std::vector<double>& ea_weights,
                   Enumeration enumeration = Enumeration::triples);

// General EA knapsack: wraps eassc through the SCSC->SCSK linear conversion.
SolveReport eask(const SetFunction& f, const SetFunction& g, double b,
                 const std::vector<double>& ea_weights, double eps = 0.05);

}  // namespace subcons

#pragma once

#include <functional>
#include <vector>

#include "subcons/oracle.hpp"
#include "subcons/report.hpp"

namespace subcons {

// An inner approximation algorithm with constant advertised factors.
// SCSC inner: called with a cover c; SCSK inner: called with a budget b.
struct InnerSolver {
  std::function<SolveReport(double bound)> solve;
  double sigma = 1.0;  // constraint-violation factor, >= 1
  double rho = 1.0;    // objective/cover factor, <= 1
};

// Linear search (shrink c from g(V)) turning a [sigma, rho] SCSC algorithm
// into a [(1-eps)*rho, sigma] SCSK one.
SolveReport scsk_via_scsc_linear(const InnerSolver& inner, const SetFunction& f,
                                 const SetFunction& g, double b, double eps = 0.05);

// Linear search (grow b from min_j f(j)) turning a [rho, sigma] SCSK algorithm
// into a [(1+eps)*sigma, rho] SCSC one.
SolveReport scsc_via_scsk_linear(const InnerSolver& inner, const SetFunction& f,
                                 const SetFunction& g, double c, double eps = 0.05);

// Binary-search variants; integral f and g tighten the factors to exact
// [rho, sigma] / [sigma, rho] within ~log2 of the value range.
SolveReport scsk_via_scsc_binary(const InnerSolver& inner, const SetFunction& f,
                                 const SetFunction& g, double b, double eps = 0.05);
SolveReport scsc_via_scsk_binary(const InnerSolver& inner, const SetFunction& f,
                                 const SetFunction& g, double c, double eps = 0.05);

// Sum of truncations: {for all i: g_i(X) >= caps[i]}  iff
// {combined(X) = combined(V)}. Enables multi-cover SCSC through the
// single-constraint solvers.
OraclePtr combine_covers(std::vector<OraclePtr> oracles, const std::vector<double>& caps);

}  // namespace subcons

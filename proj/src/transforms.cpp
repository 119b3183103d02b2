#include "subcons/transforms.hpp"

#include <cassert>
#include <cmath>
#include <limits>

#include "subcons/checks.hpp"

namespace subcons {

namespace {

// Hard probe cap: ten times the theoretical bound, guarding against a
// corrupted inner solver.
constexpr int kCapMultiplier = 10;

double min_singleton(const SetFunction& fn) {
  double m = std::numeric_limits<double>::infinity();
  for (int j = 0; j < fn.n(); ++j) m = std::min(m, fn.singleton(j));
  return m;
}

bool integral_values(const SetFunction& fn) {
  for (int j = 0; j < fn.n(); ++j) {
    const double v = fn.singleton(j);
    if (std::abs(v - std::round(v)) > kTol) return false;
  }
  const double total = fn.eval(Subset::full(fn.n()));
  return std::abs(total - std::round(total)) <= kTol;
}

void finish(SolveReport& report, const SetFunction& f, const SetFunction& g,
            int probes, const std::string& tag, double sigma, double rho) {
  report.f_value = f.eval(report.solution);
  report.g_value = g.eval(report.solution);
  report.iterations = probes;
  report.certificate.algorithm = tag;
  report.certificate.sigma = sigma;
  report.certificate.rho = rho;
}

}  // namespace

SolveReport scsk_via_scsc_linear(const InnerSolver& inner, const SetFunction& f,
                                 const SetFunction& g, double b, double eps) {
  if (eps <= 0.0 || eps >= 1.0) throw ParameterError("eps must lie in (0,1)");
  if (f.n() != g.n()) throw InstanceError("f and g must share one ground set");
  const double g_min = min_singleton(g);
  const double g_total = g.eval(Subset::full(g.n()));
  if (g_min <= kTol) throw InstanceError("g has a zero singleton");
  if (b < min_singleton(f) - kTol) {
    throw ParameterError("degenerate budget: b below the smallest f singleton");
  }

  const int bound =
      static_cast<int>(std::ceil(std::log(g_total / g_min) / -std::log1p(-eps))) + 1;
  const int cap = kCapMultiplier * std::max(bound, 1);

  double c = g_total;
  int probes = 0;
  while (probes < cap) {
    SolveReport candidate = inner.solve(c);
    ++probes;
    if (f.eval(candidate.solution) <= inner.sigma * b + kTol) {
      SolveReport report = candidate;
      finish(report, f, g, probes, "scsk_via_scsc_linear", inner.sigma,
             (1.0 - eps) * inner.rho);
      report.feasible = report.f_value <= inner.sigma * b + kTol;
      report.feasible_note = "f(X) <= sigma*b + 1e-9";
      return report;
    }
    c *= 1.0 - eps;
    if (c < g_min * (1.0 - eps) - kTol) break;
  }
  throw SearchExhaustedError("linear cover search never met the budget test");
}

SolveReport scsc_via_scsk_linear(const InnerSolver& inner, const SetFunction& f,
                                 const SetFunction& g, double c, double eps) {
  if (eps <= 0.0) throw ParameterError("eps must be positive");
  if (f.n() != g.n()) throw InstanceError("f and g must share one ground set");
  const double f_min = min_singleton(f);
  const double f_total = f.eval(Subset::full(f.n()));
  if (f_min <= kTol) throw InstanceError("f has a zero singleton");
  if (c > g.eval(Subset::full(g.n())) + kTol) {
    throw InfeasibleError("cover target exceeds g(V)");
  }

  const int bound =
      static_cast<int>(std::ceil(std::log(f_total / f_min) / std::log1p(eps))) + 1;
  const int cap = kCapMultiplier * std::max(bound, 1);

  double b = f_min;
  int probes = 0;
  while (probes < cap) {
    SolveReport candidate = inner.solve(b);
    ++probes;
    if (g.eval(candidate.solution) >= inner.rho * c - kTol) {
      SolveReport report = candidate;
      finish(report, f, g, probes, "scsc_via_scsk_linear", (1.0 + eps) * inner.sigma,
             inner.rho);
      report.feasible = report.g_value >= inner.rho * c - kTol;
      report.feasible_note = "g(X) >= rho*c - 1e-9";
      return report;
    }
    b *= 1.0 + eps;
  }
  throw SearchExhaustedError("linear budget search never met the cover test");
}

SolveReport scsk_via_scsc_binary(const InnerSolver& inner, const SetFunction& f,
                                 const SetFunction& g, double b, double eps) {
  if (eps <= 0.0 || eps >= 1.0) throw ParameterError("eps must lie in (0,1)");
  if (f.n() != g.n()) throw InstanceError("f and g must share one ground set");
  const int n = f.n();
  const double g_min = min_singleton(g);
  const double g_total = g.eval(Subset::full(n));
  const bool integral = integral_values(f) && integral_values(g);

  // Feasible-at-the-top shortcut: V itself answers at c = g(V).
  if (f.eval(Subset::full(n)) <= inner.sigma * b + kTol) {
    SolveReport report;
    report.solution = Subset::full(n);
    finish(report, f, g, 0, "scsk_via_scsc_binary", inner.sigma,
           integral ? inner.rho : (1.0 - eps) * inner.rho);
    report.feasible = true;
    report.feasible_note = "f(V) <= sigma*b";
    return report;
  }

  const int bound = static_cast<int>(std::ceil(std::log2(
                        std::max(2.0, (g_total / g_min) / (integral ? 1.0 : eps))))) +
                    2;
  const int cap = kCapMultiplier * bound;

  double c_lo = g_min;   // invariant: f(X at c_lo) <= sigma*b
  double c_hi = g_total; // invariant: f(X at c_hi) > sigma*b (V checked above)
  int probes = 0;

  SolveReport at_lo = inner.solve(c_lo);
  ++probes;
  if (f.eval(at_lo.solution) > inner.sigma * b + kTol) {
    throw InfeasibleError("even the minimum cover exceeds the budget allowance");
  }

  while (probes < cap) {
    const bool converged =
        integral ? (c_hi - c_lo <= 1.0 + kTol) : (c_hi - c_lo < eps * c_hi - kTol);
    if (converged) break;
    double mid = integral ? std::floor((c_lo + c_hi) / 2.0) : (c_lo + c_hi) / 2.0;
    if (integral && (mid <= c_lo || mid >= c_hi)) break;
    SolveReport at_mid = inner.solve(mid);
    ++probes;
    if (f.eval(at_mid.solution) > inner.sigma * b + kTol) {
      c_hi = mid;
    } else {
      c_lo = mid;
      at_lo = at_mid;
    }
    assert(f.eval(at_lo.solution) <= inner.sigma * b + kTol);  // loop invariant
  }

  SolveReport report = at_lo;
  finish(report, f, g, probes, "scsk_via_scsc_binary", inner.sigma,
         integral ? inner.rho : (1.0 - eps) * inner.rho);
  report.feasible = report.f_value <= inner.sigma * b + kTol;
  report.feasible_note = "f(X) <= sigma*b + 1e-9";
  return report;
}

SolveReport scsc_via_scsk_binary(const InnerSolver& inner, const SetFunction& f,
                                 const SetFunction& g, double c, double eps) {
  if (eps <= 0.0 || eps >= 1.0) throw ParameterError("eps must lie in (0,1)");
  if (f.n() != g.n()) throw InstanceError("f and g must share one ground set");
  const int n = f.n();
  const double f_min = min_singleton(f);
  const double f_total = f.eval(Subset::full(n));
  const bool integral = integral_values(f) && integral_values(g);
  if (c > g.eval(Subset::full(n)) + kTol) {
    throw InfeasibleError("cover target exceeds g(V)");
  }

  // Cheap-at-the-bottom shortcut: the smallest budget already covers.
  SolveReport at_min = inner.solve(f_min);
  int probes = 1;
  if (g.eval(at_min.solution) >= inner.rho * c - kTol) {
    SolveReport report = at_min;
    finish(report, f, g, probes, "scsc_via_scsk_binary",
           integral ? inner.sigma : (1.0 + eps) * inner.sigma, inner.rho);
    report.feasible = true;
    report.feasible_note = "g(X) >= rho*c - 1e-9";
    return report;
  }

  const int bound = static_cast<int>(std::ceil(std::log2(
                        std::max(2.0, (f_total / f_min) / (integral ? 1.0 : eps))))) +
                    2;
  const int cap = kCapMultiplier * bound;

  double b_lo = f_min;    // invariant: g(X at b_lo) < rho*c
  double b_hi = f_total;  // invariant: g(X at b_hi) >= rho*c
  SolveReport at_hi;
  bool have_hi = false;

  while (probes < cap) {
    const bool converged =
        integral ? (b_hi - b_lo <= 1.0 + kTol) : (b_hi - b_lo < eps * b_lo - kTol);
    if (converged) break;
    double mid = integral ? std::floor((b_lo + b_hi) / 2.0) : (b_lo + b_hi) / 2.0;
    if (integral && (mid <= b_lo || mid >= b_hi)) break;
    SolveReport at_mid = inner.solve(mid);
    ++probes;
    if (g.eval(at_mid.solution) < inner.rho * c - kTol) {
      b_lo = mid;
    } else {
      b_hi = mid;
      at_hi = at_mid;
      have_hi = true;
    }
  }
  if (!have_hi) {
    at_hi = inner.solve(b_hi);  // b_hi = f(V); guaranteed to cover
    ++probes;
    if (g.eval(at_hi.solution) < inner.rho * c - kTol) {
      throw InfeasibleError("inner solver cannot reach rho*c at the full budget");
    }
  }
  SolveReport report = at_hi;
  finish(report, f, g, probes, "scsc_via_scsk_binary",
         integral ? inner.sigma : (1.0 + eps) * inner.sigma, inner.rho);
  report.feasible = report.g_value >= inner.rho * c - kTol;
  report.feasible_note = "g(X) >= rho*c - 1e-9";
  return report;
}

OraclePtr combine_covers(std::vector<OraclePtr> oracles,
                         const std::vector<double>& caps) {
  if (oracles.empty()) throw ParameterError("combine_covers needs at least one oracle");
  if (oracles.size() != caps.size()) {
    throw ParameterError("one cap per oracle required");
  }
  std::vector<OraclePtr> terms;
  terms.reserve(oracles.size());
  for (std::size_t i = 0; i < oracles.size(); ++i) {
    terms.push_back(truncate(oracles[i], caps[i]));
  }
  if (terms.size() == 1) return terms.front();
  return std::make_shared<SumOracle>(std::move(terms));
}

}  // namespace subcons

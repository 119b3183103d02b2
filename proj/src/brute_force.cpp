#include "subcons/brute_force.hpp"

namespace subcons {

namespace {

void check_pair(const SetFunction& f, const SetFunction& g) {
  if (f.n() != g.n()) throw InstanceError("f and g must share one ground set");
  if (f.n() > 20) throw ParameterError("brute force limited to n <= 20");
}

}  // namespace

SolveReport brute_force_scsc(const SetFunction& f, const SetFunction& g, double c) {
  check_pair(f, g);
  const int n = f.n();
  const std::uint64_t limit = std::uint64_t{1} << n;

  SolveReport report;
  report.certificate.algorithm = "brute_force_scsc";
  bool found = false;
  double best_f = 0.0;
  Subset best(n);
  // Ascending mask order; strict improvement keeps the lexicographically
  // smallest optimum.
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    Subset x = Subset::from_mask(n, mask);
    if (g.eval(x) < c - kTol) continue;
    const double fx = f.eval(x);
    if (!found || fx < best_f) {
      found = true;
      best_f = fx;
      best = x;
    }
  }
  if (!found) throw InfeasibleError("no set reaches the cover target");
  report.solution = best;
  report.f_value = f.eval(best);
  report.g_value = g.eval(best);
  report.feasible = true;
  report.iterations = static_cast<int>(limit);
  return report;
}

SolveReport brute_force_scsk(const SetFunction& f, const SetFunction& g, double b) {
  check_pair(f, g);
  const int n = f.n();
  const std::uint64_t limit = std::uint64_t{1} << n;

  SolveReport report;
  report.certificate.algorithm = "brute_force_scsk";
  bool found = false;
  double best_g = 0.0;
  Subset best(n);
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    Subset x = Subset::from_mask(n, mask);
    if (f.eval(x) > b + kTol) continue;
    const double gx = g.eval(x);
    if (!found || gx > best_g) {
      found = true;
      best_g = gx;
      best = x;
    }
  }
  // mask 0 is always feasible (f(empty) = 0 <= b for b >= 0); for negative b
  // treat the empty set as the only answer.
  report.solution = found ? best : Subset(n);
  report.f_value = f.eval(report.solution);
  report.g_value = g.eval(report.solution);
  report.feasible = report.f_value <= b + kTol;
  report.iterations = static_cast<int>(limit);
  return report;
}

}  // namespace subcons

#include "subcons/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "subcons/transforms.hpp"

namespace subcons {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double weight_sum(std::span<const double> w, const Subset& x) {
  double s = 0.0;
  for (int j : x.elements()) s += w[j];
  return s;
}

void check_weights(std::span<const double> w, const SetFunction& g) {
  if (static_cast<int>(w.size()) != g.n()) {
    throw ParameterError("cost weight count does not match the ground set");
  }
  for (double v : w) {
    // Surrogate gains may carry rounding noise; only reject genuine negatives.
    if (v < -kTol) throw ParameterError("cost weights must be nonnegative");
  }
}

double harmonic(int d) {
  double h = 0.0;
  for (int i = 1; i <= d; ++i) h += 1.0 / i;
  return h;
}

// Explicit-constant stand-in for the O(sqrt(n) log n) EA factor.
double ea_factor(int n) { return std::max(1.0, std::sqrt(n) * std::log(n)); }

double curvature_mixed_factor(double base, double kappa) {
  return base / (1.0 + (base - 1.0) * (1.0 - kappa));
}

}  // namespace

CoverFactor cover_factor(const SetFunction& g) {
  CoverFactor cf;
  double max_singleton = 0.0;
  for (int j = 0; j < g.n(); ++j) {
    const double v = g.singleton(j);
    max_singleton = std::max(max_singleton, v);
    if (std::abs(v - std::round(v)) > kTol) cf.integral = false;
  }
  if (cf.integral) {
    cf.value = harmonic(static_cast<int>(std::floor(max_singleton + kTol)));
  } else {
    cf.value = 1.0 + std::log(std::max(1.0, g.eval(Subset::full(g.n())) / kTol));
  }
  cf.value = std::max(cf.value, 1.0);
  return cf;
}

CardinalityEstimate max_card_below_cover(const SetFunction& g, double c) {
  const int n = g.n();
  if (auto* mod = dynamic_cast<const ModularOracle*>(&g)) {
    std::vector<double> w = mod->weights();
    std::sort(w.begin(), w.end());
    double sum = 0.0;
    int count = 0;
    for (double v : w) {
      if (sum + v < c - kTol) {
        sum += v;
        ++count;
      } else {
        break;
      }
    }
    return {count, false};
  }
  if (n <= 16) {
    int best = -1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
      Subset x = Subset::from_mask(n, mask);
      if (x.card() > best && g.eval(x) < c - kTol) best = x.card();
    }
    return {std::max(best, 0), false};
  }
  // Greedy: grow with the smallest gains while staying under the cover.
  Subset s(n);
  double gs = g.eval(s);
  while (true) {
    int pick = -1;
    double pick_gain = kInf;
    for (int j = 0; j < n; ++j) {
      if (s.contains(j)) continue;
      const double gain = g.gain(j, s);
      if (gain < pick_gain - kTol && g.eval(s.with(j)) < c - kTol) {
        pick = j;
        pick_gain = gain;
      }
    }
    if (pick < 0) break;
    s.add(pick);
    gs += pick_gain;
  }
  return {s.card(), true};
}

CardinalityEstimate max_card_within_budget(const SetFunction& f, double b) {
  const int n = f.n();
  if (auto* mod = dynamic_cast<const ModularOracle*>(&f)) {
    std::vector<double> w = mod->weights();
    std::sort(w.begin(), w.end());
    double sum = 0.0;
    int count = 0;
    for (double v : w) {
      if (sum + v <= b + kTol) {
        sum += v;
        ++count;
      } else {
        break;
      }
    }
    return {count, false};
  }
  if (n <= 16) {
    int best = 0;
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
      Subset x = Subset::from_mask(n, mask);
      if (x.card() > best && f.eval(x) <= b + kTol) best = x.card();
    }
    return {best, false};
  }
  Subset s(n);
  while (true) {
    int pick = -1;
    double pick_gain = kInf;
    for (int j = 0; j < n; ++j) {
      if (s.contains(j)) continue;
      const double gain = f.gain(j, s);
      if (gain < pick_gain - kTol && f.eval(s.with(j)) <= b + kTol) {
        pick = j;
        pick_gain = gain;
      }
    }
    if (pick < 0) break;
    s.add(pick);
  }
  return {s.card(), true};
}

CardinalityEstimate min_maximal_card(const SetFunction& f, double b) {
  const int n = f.n();
  if (n <= 16) {
    int best = n + 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
      Subset x = Subset::from_mask(n, mask);
      if (x.card() >= best || f.eval(x) > b + kTol) continue;
      bool maximal = true;
      for (int j = 0; j < n && maximal; ++j) {
        if (!x.contains(j) && f.eval(x.with(j)) <= b + kTol) maximal = false;
      }
      if (maximal) best = x.card();
    }
    return {best <= n ? best : 0, false};
  }
  // Fill the budget with the largest feasible gains; yields some maximal set,
  // an upper estimate of k_f.
  Subset s(n);
  while (true) {
    int pick = -1;
    double pick_gain = -1.0;
    for (int j = 0; j < n; ++j) {
      if (s.contains(j)) continue;
      if (f.eval(s.with(j)) > b + kTol) continue;
      const double gain = f.gain(j, s);
      if (gain > pick_gain + kTol) {
        pick = j;
        pick_gain = gain;
      }
    }
    if (pick < 0) break;
    s.add(pick);
  }
  return {s.card(), true};
}

// --- SSC greedy ---------------------------------------------------------------

namespace {

SolveReport ssc_greedy_core(std::span<const double> w, const SetFunction& g,
                            double c, const std::string& tag) {
  check_weights(w, g);
  const int n = g.n();
  SolveReport report;
  report.certificate.algorithm = tag;
  const CoverFactor hf = cover_factor(g);
  report.certificate.sigma = hf.value;
  report.certificate.rho = 1.0;
  report.certificate.ingredients.H_g = hf.value;
  report.certificate.ingredients.nonintegral_Hg = !hf.integral;

  if (g.eval(Subset::full(n)) < c - kTol) {
    throw InfeasibleError("cover target exceeds g(V)");
  }

  Subset s(n);
  double gs = g.eval(s);
  double cost = 0.0;

  // Lazy greedy: gains only shrink as s grows, so a stale ratio is a lower
  // bound and a freshly recomputed heap top is the exact argmin. Equal-ratio
  // ties resolve to the smallest index through the comparator; stale entries
  // with the same stale ratio and a smaller index are refreshed first.
  struct Cand {
    double ratio;
    int j;
    int step;
  };
  auto after = [](const Cand& a, const Cand& b) {
    if (a.ratio != b.ratio) return a.ratio > b.ratio;
    return a.j > b.j;
  };
  std::priority_queue<Cand, std::vector<Cand>, decltype(after)> heap(after);
  int step = 0;
  for (int j = 0; j < n; ++j) {
    const double gain = g.eval(s.with(j)) - gs;
    if (gain > kTol) heap.push({w[j] / gain, j, step});
  }
  while (gs < c - kTol) {
    int pick = -1;
    while (!heap.empty()) {
      const Cand top = heap.top();
      heap.pop();
      if (top.step == step) {
        pick = top.j;
        break;
      }
      const double gain = g.eval(s.with(top.j)) - gs;
      if (gain > kTol) heap.push({w[top.j] / gain, top.j, step});
    }
    if (pick < 0) {
      throw InfeasibleError("all remaining gains are zero before the cover is met");
    }
    s.add(pick);
    cost += w[pick];
    gs = g.eval(s);
    ++step;
    ++report.iterations;
    report.trace.push_back({report.iterations, "greedy_chain", cost, gs});
  }
  report.solution = s;
  report.f_value = weight_sum(w, s);
  report.g_value = g.eval(s);
  report.feasible = report.g_value >= c - kTol;
  report.feasible_note = "g(X) >= c - 1e-9";
  return report;
}

}  // namespace

SolveReport ssc_greedy(std::span<const double> f_weights, const SetFunction& g,
                       double c) {
  return ssc_greedy_core(f_weights, g, c, "ssc_greedy");
}

SolveReport ssc_greedy(const ModularOracle& f, const SetFunction& g, double c) {
  if (f.n() != g.n()) throw InstanceError("f and g must share one ground set");
  validate_oracle(f);  // positive weights required on the user-facing path
  return ssc_greedy_core(f.weights(), g, c, "ssc_greedy");
}

// --- SK greedy -----------------------------------------------------------------

namespace {

// Ratio-greedy completion starting from `seed`; returns the grown set.
Subset sk_greedy_fill(std::span<const double> w, const SetFunction& g, double b,
                      Subset seed) {
  const int n = g.n();
  double cost = weight_sum(w, seed);
  double gseed = g.eval(seed);

  // Lazy greedy mirror of the cover loop: gains (hence gain/weight ratios)
  // only shrink, stale keys upper-bound fresh ones, and both the budget filter
  // and the zero-gain filter are permanent once they trigger. Free elements
  // (weight ~ 0) rank by gain, then smallest index.
  struct Cand {
    double ratio;
    double gain;
    int j;
    int step;
  };
  auto after = [](const Cand& a, const Cand& b) {
    if (a.ratio != b.ratio) return a.ratio < b.ratio;
    if (a.ratio == kInf && a.gain != b.gain) return a.gain < b.gain;
    return a.j > b.j;
  };
  std::priority_queue<Cand, std::vector<Cand>, decltype(after)> heap(after);
  int step = 0;
  for (int j = 0; j < n; ++j) {
    if (seed.contains(j)) continue;
    if (cost + w[j] > b + kTol) continue;
    const double gain = g.eval(seed.with(j)) - gseed;
    if (gain <= kTol) continue;
    heap.push({w[j] <= kTol ? kInf : gain / w[j], gain, j, step});
  }
  while (true) {
    int pick = -1;
    while (!heap.empty()) {
      const Cand top = heap.top();
      heap.pop();
      if (top.step == step) {
        pick = top.j;
        break;
      }
      if (cost + w[top.j] > b + kTol) continue;
      const double gain = g.eval(seed.with(top.j)) - gseed;
      if (gain <= kTol) continue;
      heap.push({w[top.j] <= kTol ? kInf : gain / w[top.j], gain, top.j, step});
    }
    if (pick < 0) break;
    seed.add(pick);
    cost += w[pick];
    gseed = g.eval(seed);
    ++step;
  }
  return seed;
}

SolveReport sk_greedy_core(std::span<const double> w, const SetFunction& g,
                           double b, Enumeration enumeration, const std::string& tag) {
  check_weights(w, g);
  const int n = g.n();
  SolveReport report;
  report.certificate.algorithm = tag;
  report.certificate.sigma = 1.0;
  report.certificate.rho =
      enumeration == Enumeration::triples ? 1.0 - std::exp(-1.0) : 0.5 * (1.0 - std::exp(-1.0));

  Subset best(n);
  double best_g = g.eval(best);
  auto consider = [&](const Subset& cand) {
    const double val = g.eval(cand);
    if (val > best_g + kTol) {
      best = cand;
      best_g = val;
    }
    ++report.iterations;
  };

  if (enumeration == Enumeration::none) {
    consider(sk_greedy_fill(w, g, b, Subset(n)));
    // Lemma-shaped comparison against the best feasible singleton.
    for (int j = 0; j < n; ++j) {
      if (w[j] <= b + kTol) consider(Subset(n).with(j));
    }
  } else {
    // Partial enumeration: all feasible seeds of size <= 2 as-is, greedy
    // completion of every feasible size-3 seed.
    for (int i = 0; i < n; ++i) {
      if (w[i] > b + kTol) continue;
      consider(Subset(n).with(i));
      for (int j = i + 1; j < n; ++j) {
        Subset pair = Subset(n).with(i).with(j);
        if (weight_sum(w, pair) > b + kTol) continue;
        consider(pair);
        for (int k = j + 1; k < n; ++k) {
          Subset seed = pair.with(k);
          if (weight_sum(w, seed) > b + kTol) continue;
          consider(sk_greedy_fill(w, g, b, seed));
        }
      }
    }
  }

  report.solution = best;
  report.f_value = weight_sum(w, best);
  report.g_value = g.eval(best);
  report.feasible = report.f_value <= b + kTol;
  report.feasible_note = "w(X) <= b + 1e-9";
  report.trace.push_back({1, "greedy_chain", report.f_value, report.g_value});
  return report;
}

}  // namespace

SolveReport sk_greedy(std::span<const double> f_weights, const SetFunction& g,
                      double b, Enumeration enumeration) {
  return sk_greedy_core(f_weights, g, b, enumeration, "sk_greedy");
}

SolveReport sk_greedy(const ModularOracle& f, const SetFunction& g, double b,
                      Enumeration enumeration) {
  if (f.n() != g.n()) throw InstanceError("f and g must share one ground set");
  validate_oracle(f);
  return sk_greedy_core(f.weights(), g, b, enumeration, "sk_greedy");
}

// --- ISSC -------------------------------------------------------------------------

SolveReport issc(const SetFunction& f, const SetFunction& g, double c,
                 BoundVariant variant, int max_iters) {
  if (f.n() != g.n()) throw InstanceError("f and g must share one ground set");
  const double kappa_f = curvature(f);

  SolveReport report;
  report.certificate.algorithm = "issc";
  Subset incumbent(f.n());
  double best_f = kInf;
  for (int t = 1; t <= max_iters; ++t) {
    const ModularSurrogate m = variant == BoundVariant::m1
                                   ? upper_bound_1(f, incumbent)
                                   : upper_bound_2(f, incumbent);
    SolveReport inner = ssc_greedy_core(m.weights, g, c, "ssc_greedy");
    const double true_f = f.eval(inner.solution);
    report.iterations = t;
    if (true_f < best_f - kTol) {
      incumbent = inner.solution;
      best_f = true_f;
      report.trace.push_back({t, variant == BoundVariant::m1 ? "m1" : "m2", true_f,
                              g.eval(incumbent)});
    } else {
      break;  // surrogate no longer improves the true objective
    }
  }

  report.solution = incumbent;
  report.f_value = f.eval(incumbent);
  report.g_value = g.eval(incumbent);
  report.feasible = report.g_value >= c - kTol;
  report.feasible_note = "g(X) >= c - 1e-9";

  const CoverFactor hf = cover_factor(g);
  const CardinalityEstimate below = max_card_below_cover(g, c);
  const double K_g = below.value + 1;
  report.certificate.sigma = curvature_mixed_factor(K_g, kappa_f) * hf.value;
  report.certificate.rho = 1.0;
  report.certificate.ingredients.H_g = hf.value;
  report.certificate.ingredients.nonintegral_Hg = !hf.integral;
  report.certificate.ingredients.K_g = K_g;
  report.certificate.ingredients.kappa_f = kappa_f;
  report.certificate.ingredients.estimated = below.estimated;
  return report;
}

// --- Gr ---------------------------------------------------------------------------

SolveReport gr(const SetFunction& f, const SetFunction& g, double b) {
  if (f.n() != g.n()) throw InstanceError("f and g must share one ground set");
  const int n = f.n();

  SolveReport report;
  report.certificate.algorithm = "gr";
  Subset s(n);
  while (true) {
    int pick = -1;
    double pick_gain = kTol;
    for (int j = 0; j < n; ++j) {
      if (s.contains(j)) continue;
      if (f.eval(s.with(j)) > b + kTol) continue;
      const double gain = g.gain(j, s);
      if (gain > pick_gain + kTol) {
        pick = j;
        pick_gain = gain;
      }
    }
    if (pick < 0) break;
    s.add(pick);
    ++report.iterations;
    report.trace.push_back({report.iterations, "greedy", f.eval(s), g.eval(s)});
  }

  report.solution = s;
  report.f_value = f.eval(s);
  report.g_value = g.eval(s);
  report.feasible = report.f_value <= b + kTol;
  report.feasible_note = "f(X) <= b + 1e-9";

  const double kappa_g = curvature(g);
  const CardinalityEstimate Kf = max_card_within_budget(f, b);
  const CardinalityEstimate kf = min_maximal_card(f, b);
  double rho;
  if (Kf.value == 0) {
    rho = 1.0;  // only the empty set is feasible
  } else if (kappa_g <= kTol) {
    rho = static_cast<double>(kf.value) / Kf.value;  // kappa_g -> 0 limit
  } else {
    rho = (1.0 / kappa_g) *
          (1.0 - std::pow((Kf.value - kappa_g) / Kf.value, kf.value));
  }
  report.certificate.sigma = 1.0;
  report.certificate.rho = Kf.value == 0 ? 1.0 : std::max(rho, 1.0 / Kf.value);
  report.certificate.ingredients.kappa_g = kappa_g;
  report.certificate.ingredients.K_f = Kf.value;
  report.certificate.ingredients.k_f = kf.value;
  report.certificate.ingredients.estimated = Kf.estimated || kf.estimated;
  return report;
}

// --- ISK --------------------------------------------------------------------------

SolveReport isk(const SetFunction& f, const SetFunction& g, double b,
                BoundVariant variant, int max_iters, IskMode mode,
                Enumeration enumeration) {
  if (f.n() != g.n()) throw InstanceError("f and g must share one ground set");
  const double kappa_f = curvature(f);
  const CardinalityEstimate Kf = max_card_within_budget(f, b);
  const double mix =
      Kf.value == 0 ? 1.0 : curvature_mixed_factor(static_cast<double>(Kf.value), kappa_f);

  const double run_budget = mode == IskMode::type1 ? b * mix : b;

  SolveReport report;
  report.certificate.algorithm = mode == IskMode::type1 ? "isk_type1" : "isk";
  Subset incumbent(f.n());
  double best_g = g.eval(incumbent);
  for (int t = 1; t <= max_iters; ++t) {
    const ModularSurrogate m = variant == BoundVariant::m1
                                   ? upper_bound_1(f, incumbent)
                                   : upper_bound_2(f, incumbent);
    // m(Y) <= budget  <=>  weights(Y) <= budget - offset.
    SolveReport inner =
        sk_greedy_core(m.weights, g, run_budget - m.offset, enumeration, "sk_greedy");
    const double true_g = g.eval(inner.solution);
    report.iterations = t;
    if (true_g > best_g + kTol) {
      incumbent = inner.solution;
      best_g = true_g;
      report.trace.push_back({t, variant == BoundVariant::m1 ? "m1" : "m2",
                              f.eval(incumbent), true_g});
    } else {
      break;
    }
  }

  report.solution = incumbent;
  report.f_value = f.eval(incumbent);
  report.g_value = g.eval(incumbent);
  report.feasible = report.f_value <= run_budget + kTol;
  report.feasible_note = mode == IskMode::type1
                             ? "f(X) <= inflated budget + 1e-9"
                             : "f(X) <= b + 1e-9";

  report.certificate.rho = 1.0 - std::exp(-1.0);
  if (mode == IskMode::type1) {
    report.certificate.sigma = mix;
    report.certificate.ingredients.reference_bound = run_budget;
  } else {
    report.certificate.sigma = 1.0;
    // Guarantee is stated against the optimum at the shrunk budget.
    report.certificate.ingredients.reference_bound = Kf.value == 0 ? b : b / mix;
  }
  report.certificate.ingredients.K_f = Kf.value;
  report.certificate.ingredients.kappa_f = kappa_f;
  report.certificate.ingredients.estimated = Kf.estimated;
  return report;
}

// --- EA pipelines -------------------------------------------------------------------

SolveReport eassc_c(const SetFunction& f, const SetFunction& g, double c,
                    const std::vector<double>& ea_weights) {
  if (f.n() != g.n()) throw InstanceError("f and g must share one ground set");
  SolveReport report = ssc_greedy_core(ea_weights, g, c, "eassc_c");
  report.f_value = f.eval(report.solution);
  const CoverFactor hf = cover_factor(g);
  report.certificate.sigma = ea_factor(f.n()) * std::sqrt(hf.value);
  report.certificate.rho = 1.0;
  report.certificate.ingredients.H_g = hf.value;
  report.certificate.ingredients.nonintegral_Hg = !hf.integral;
  report.certificate.ingredients.relative_to_weights = true;
  return report;
}

SolveReport eassc(const SetFunction& f, const SetFunction& g, double c,
                  const std::vector<double>& ea_weights, int lambda_grid_size) {
  if (f.n() != g.n()) throw InstanceError("f and g must share one ground set");
  if (lambda_grid_size < 2) throw ParameterError("lambda grid needs >= 2 points");
  const double kappa = curvature(f);
  if (kappa <= kTol) throw ParameterError("eassc needs kappa_f > 0");
  if (kappa >= 1.0 - kTol) return eassc_c(f, g, c, ea_weights);

  const int n = f.n();
  const EASurrogate ea = ea_surrogate(f, ea_weights);

  double sum_w = 0.0, sum_sqrt = 0.0, min_sqrt = kInf;
  for (double w : ea_weights) {
    if (w < 0.0) throw ParameterError("EA weights must be nonnegative");
    sum_w += w;
    if (w > 0.0) {
      sum_sqrt += std::sqrt(w);
      min_sqrt = std::min(min_sqrt, std::sqrt(w));
    }
  }
  if (sum_w <= 0.0) throw ParameterError("EA weights must not be all zero");

  // Geometric slope grid bracketing the gradient range of sqrt(w(X)).
  const double mu_min = kappa * min_sqrt / (2.0 * sum_sqrt);
  const double mu_max = kappa * std::sqrt(sum_w) * n;
  const double step = std::pow(mu_max / mu_min, 1.0 / (lambda_grid_size - 1));

  SolveReport report;
  report.certificate.algorithm = "eassc";
  bool have = false;
  double best_ea = kInf, best_true = kInf;
  Subset best(n);
  double mu = mu_min;
  for (int i = 0; i < lambda_grid_size; ++i, mu *= step) {
    std::vector<double> cost(n);
    for (int j = 0; j < n; ++j) {
      cost[j] = mu * ea_weights[j] + (1.0 - kappa) * ea.singleton_weights()[j];
    }
    SolveReport inner = ssc_greedy_core(cost, g, c, "ssc_greedy");
    const double val_ea = ea.value(inner.solution);
    const double val_true = f.eval(inner.solution);
    report.trace.push_back({i + 1, "mu_sweep", val_true, inner.g_value});
    const bool better =
        !have || val_ea < best_ea - kTol ||
        (val_ea < best_ea + kTol &&
         (val_true < best_true - kTol ||
          (val_true < best_true + kTol && inner.solution.lex_less(best))));
    if (better) {
      have = true;
      best_ea = val_ea;
      best_true = val_true;
      best = inner.solution;
    }
  }
  report.iterations = lambda_grid_size;
  report.solution = best;
  report.f_value = f.eval(best);
  report.g_value = g.eval(best);
  report.feasible = report.g_value >= c - kTol;
  report.feasible_note = "g(X) >= c - 1e-9";

  const CoverFactor hf = cover_factor(g);
  report.certificate.sigma = curvature_mixed_factor(ea_factor(n), kappa) * hf.value;
  report.certificate.rho = 1.0;
  report.certificate.ingredients.H_g = hf.value;
  report.certificate.ingredients.nonintegral_Hg = !hf.integral;
  report.certificate.ingredients.kappa_f = kappa;
  report.certificate.ingredients.relative_to_weights = true;
  return report;
}

SolveReport eask_c(const SetFunction& f, const SetFunction& g, double b,
                   const std::vector<double>& ea_weights, Enumeration enumeration) {
  if (f.n() != g.n()) throw InstanceError("f and g must share one ground set");
  SolveReport report =
      sk_greedy_core(ea_weights, g, b * b, enumeration, "eask_c");
  report.f_value = f.eval(report.solution);
  report.certificate.sigma = ea_factor(f.n());
  report.certificate.rho = 1.0 - std::exp(-1.0);
  report.certificate.ingredients.relative_to_weights = true;
  // Empirical budget-violation factor.
  report.feasible = report.f_value <= b + kTol;
  report.feasible_note = b > 0.0 ? "empirical f(X)/b = " + std::to_string(report.f_value / b)
                                 : "b = 0";
  return report;
}

SolveReport eask(const SetFunction& f, const SetFunction& g, double b,
                 const std::vector<double>& ea_weights, double eps) {
  if (f.n() != g.n()) throw InstanceError("f and g must share one ground set");
  const double kappa = curvature(f);
  if (kappa <= kTol) {
    throw ParameterError("eask rejected for modular f (kappa = 0); use sk_greedy");
  }
  if (kappa >= 1.0 - kTol) return eask_c(f, g, b, ea_weights);

  const CoverFactor hf = cover_factor(g);
  const double sigma_inner =
      curvature_mixed_factor(ea_factor(f.n()), kappa) * hf.value;
  InnerSolver inner;
  inner.sigma = sigma_inner;
  inner.rho = 1.0;
  // EA weights are computed once by the caller and reused across covers.
  inner.solve = [&](double c) { return eassc(f, g, c, ea_weights); };

  SolveReport report = scsk_via_scsc_linear(inner, f, g, b, eps);
  report.certificate.algorithm = "eask";
  report.certificate.ingredients.H_g = hf.value;
  report.certificate.ingredients.nonintegral_Hg = !hf.integral;
  report.certificate.ingredients.kappa_f = kappa;
  report.certificate.ingredients.relative_to_weights = true;
  return report;
}

}  // namespace subcons

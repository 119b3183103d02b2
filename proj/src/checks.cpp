#include "subcons/checks.hpp"

#include <algorithm>
#include <cmath>

#include "subcons/rng.hpp"

namespace subcons {

namespace {

// Random (S, T, j) with S subset of T, j outside T.
struct Triple {
  Subset small, large;
  int element;
};

Triple random_triple(int n, Xoshiro256& rng) {
  Triple t{Subset(n), Subset(n), 0};
  do {
    t.element = rng.index(n);
    t.large = Subset(n);
    for (int j = 0; j < n; ++j) {
      if (j != t.element && rng.next() & 1) t.large.add(j);
    }
  } while (false);
  t.small = Subset(n);
  for (int j : t.large.elements()) {
    if (rng.next() & 1) t.small.add(j);
  }
  return t;
}

}  // namespace

PropertyReport check_submodular(const SetFunction& oracle, std::uint64_t seed,
                                int samples) {
  const int n = oracle.n();
  PropertyReport report;
  if (n <= 16) {
    // f(i | X) >= f(i | X u {j}) over all X and distinct i, j outside X is
    // equivalent to full diminishing returns.
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
      Subset x = Subset::from_mask(n, mask);
      for (int i = 0; i < n; ++i) {
        if (x.contains(i)) continue;
        const double gi = oracle.gain(i, x);
        for (int j = 0; j < n; ++j) {
          if (j == i || x.contains(j)) continue;
          const double gij = oracle.gain(i, x.with(j));
          ++report.checked;
          if (gi < gij - kTol) {
            report.ok = false;
            report.witness = PropertyWitness{x, x.with(j), i, gi, gij};
            return report;
          }
        }
      }
    }
    return report;
  }
  report.exhaustive = false;
  Xoshiro256 rng(seed);
  for (int s = 0; s < samples; ++s) {
    Triple t = random_triple(n, rng);
    const double gs = oracle.gain(t.element, t.small);
    const double gt = oracle.gain(t.element, t.large);
    ++report.checked;
    if (gs < gt - kTol) {
      report.ok = false;
      report.witness = PropertyWitness{t.small, t.large, t.element, gs, gt};
      return report;
    }
  }
  return report;
}

PropertyReport check_monotone(const SetFunction& oracle, std::uint64_t seed,
                              int samples) {
  const int n = oracle.n();
  PropertyReport report;
  if (n <= 16) {
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
      Subset x = Subset::from_mask(n, mask);
      for (int j = 0; j < n; ++j) {
        if (x.contains(j)) continue;
        const double g = oracle.gain(j, x);
        ++report.checked;
        if (g < -kTol) {
          report.ok = false;
          report.witness = PropertyWitness{x, x.with(j), j, g, 0.0};
          return report;
        }
      }
    }
    return report;
  }
  report.exhaustive = false;
  Xoshiro256 rng(seed);
  for (int s = 0; s < samples; ++s) {
    Triple t = random_triple(n, rng);
    const double g = oracle.gain(t.element, t.large);
    ++report.checked;
    if (g < -kTol) {
      report.ok = false;
      report.witness = PropertyWitness{t.large, t.large.with(t.element), t.element, g, 0.0};
      return report;
    }
  }
  return report;
}

double curvature(const SetFunction& oracle) {
  const int n = oracle.n();
  const Subset full = Subset::full(n);
  double min_ratio = 1.0;
  for (int j = 0; j < n; ++j) {
    const double fj = oracle.singleton(j);
    if (fj <= kTol) {
      throw InstanceError("curvature undefined: zero singleton at element " +
                          std::to_string(j));
    }
    min_ratio = std::min(min_ratio, oracle.gain(j, full.without(j)) / fj);
  }
  return std::clamp(1.0 - min_ratio, 0.0, 1.0);
}

OraclePtr truncate(OraclePtr oracle, double alpha) {
  if (alpha <= 0.0) throw ParameterError("truncation cap must be positive");
  return std::make_shared<TruncationOracle>(std::move(oracle), alpha);
}

}  // namespace subcons

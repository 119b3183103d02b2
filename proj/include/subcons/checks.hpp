#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "subcons/oracle.hpp"

namespace subcons {

// Witness of a diminishing-returns or monotonicity violation.
struct PropertyWitness {
  Subset small;   // S
  Subset large;   // T (for submodularity) or S u {j} (for monotonicity)
  int element;    // j
  double lhs;     // f(j | S)
  double rhs;     // f(j | T) or 0
};

struct PropertyReport {
  bool ok = true;
  bool exhaustive = true;
  std::int64_t checked = 0;
  std::optional<PropertyWitness> witness;
};

// Diminishing returns: f(j | S) >= f(j | T) for S subset of T, j outside T.
// Exhaustive over all context pairs for n <= 16; seeded random triples above.
PropertyReport check_submodular(const SetFunction& oracle, std::uint64_t seed = 1,
                                int samples = 20000);

// f(j | X) >= 0 everywhere; exhaustive for n <= 16, sampled above.
PropertyReport check_monotone(const SetFunction& oracle, std::uint64_t seed = 1,
                              int samples = 20000);

// Total curvature kappa_f = 1 - min_j f(j | V\j) / f(j), clamped to [0,1].
// Requires positive singletons.
double curvature(const SetFunction& oracle);

// min{g(X), alpha} with parameter validation; preserves monotonicity and
// submodularity, and {g(X) >= alpha} iff {g'(X) = g'(V)}.
OraclePtr truncate(OraclePtr oracle, double alpha);

}  // namespace subcons

#pragma once

#include "subcons/oracle.hpp"
#include "subcons/report.hpp"

namespace subcons {

// Exact SCSC: min f(X) s.t. g(X) >= c, by exhaustive enumeration (n <= 20).
// Ties broken toward the lexicographically smallest bitmask.
SolveReport brute_force_scsc(const SetFunction& f, const SetFunction& g, double c);

// Exact SCSK: max g(X) s.t. f(X) <= b. The empty set is always feasible.
SolveReport brute_force_scsk(const SetFunction& f, const SetFunction& g, double b);

}  // namespace subcons

#pragma once

#include <stdexcept>
#include <string>

namespace subcons {

// Absolute tolerance used for all feasibility and value comparisons.
inline constexpr double kTol = 1e-9;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed oracle or instance (out-of-range element, zero singleton, ...).
struct InstanceError : Error {
  using Error::Error;
};

// Invalid operation parameter (negative weight, bad cap, ...).
struct ParameterError : Error {
  using Error::Error;
};

// The requested cover/budget cannot be met.
struct InfeasibleError : Error {
  using Error::Error;
};

// A guarded search loop ran out of probes.
struct SearchExhaustedError : Error {
  using Error::Error;
};

}  // namespace subcons

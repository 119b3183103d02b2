#pragma once

#include <vector>

#include "subcons/checks.hpp"
#include "subcons/oracle.hpp"

namespace subcons {

// A permutation of the ground set; prefixes form the chain S_0 = empty,
// S_i = {order[0..i-1]}.
class Permutation {
 public:
  explicit Permutation(std::vector<int> order);

  // Any permutation placing the elements of `first` in the leading positions
  // (ascending within each block).
  static Permutation placing_first(const Subset& first);

  int n() const { return static_cast<int>(order_.size()); }
  int at(int i) const { return order_[i]; }
  const std::vector<int>& order() const { return order_; }
  Subset prefix(int len) const;

 private:
  std::vector<int> order_;
};

enum class BoundDirection { lower, upper };

// Affine set function offset + sum_{j in X} weights[j], tight at `anchor` on
// the function it bounds.
struct ModularSurrogate {
  std::vector<double> weights;
  double offset = 0.0;
  Subset anchor;
  BoundDirection direction = BoundDirection::lower;

  double value(const Subset& x) const {
    double s = offset;
    for (int j : x.elements()) s += weights[j];
    return s;
  }
};

// kappa * sqrt(w(X)) + (1 - kappa) * singleton-sum; the square-root-shaped
// surrogate used by the EA pipelines. Monotone submodular by construction.
class EASurrogate : public SetFunction {
 public:
  EASurrogate(double kappa, std::vector<double> ea_weights,
              std::vector<double> singleton_weights);
  std::string kind() const override { return "ea_surrogate"; }

  double kappa() const { return kappa_; }
  const std::vector<double>& ea_weights() const { return ea_weights_; }
  const std::vector<double>& singleton_weights() const { return singleton_weights_; }
  double value(const Subset& x) const { return eval(x); }

 protected:
  double do_eval(const Subset& x) const override;

 private:
  double kappa_;
  std::vector<double> ea_weights_;
  std::vector<double> singleton_weights_;
};

// Chain extreme point of the subdifferential: weights[pi(i)] =
// f(S_i) - f(S_{i-1}). Lower bound everywhere, tight on every chain prefix.
ModularSurrogate subgradient(const SetFunction& oracle, const Permutation& pi);

// The "grow" supergradient m^f_{X,1}: anchors singleton gains outside X and
// within-X removal gains f(j | X\j).
ModularSurrogate upper_bound_1(const SetFunction& oracle, const Subset& x);

// The "shrink" supergradient m^f_{X,2}: complement gains f(j | V\j) inside X
// and context gains f(j | X) outside.
ModularSurrogate upper_bound_2(const SetFunction& oracle, const Subset& x);

// f^kappa(X) = [f(X) - (1 - kappa) * singleton-sum] / kappa; requires
// kappa_f > 0. Normalized, monotone submodular, with curvature 1.
OraclePtr curve_normalize(OraclePtr oracle);

// Assembles the EA-shaped surrogate from caller-supplied weights.
EASurrogate ea_surrogate(const SetFunction& oracle, std::vector<double> ea_weights);

// Default weight heuristic w[j] = (f^kappa({j}))^2 = f({j})^2, which makes
// sqrt(w(X)) <= f^kappa(X) by subadditivity.
std::vector<double> default_ea_weights(const SetFunction& oracle);

}  // namespace subcons

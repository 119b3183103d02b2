#include "subcons/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace subcons {

Permutation::Permutation(std::vector<int> order) : order_(std::move(order)) {
  const int n = static_cast<int>(order_.size());
  if (n < 1) throw ParameterError("permutation must be nonempty");
  std::vector<bool> seen(n, false);
  for (int v : order_) {
    if (v < 0 || v >= n || seen[v]) throw ParameterError("order is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::placing_first(const Subset& first) {
  std::vector<int> order = first.elements();
  for (int j : first.complement().elements()) order.push_back(j);
  return Permutation(std::move(order));
}

Subset Permutation::prefix(int len) const {
  Subset s(n());
  for (int i = 0; i < len; ++i) s.add(order_[i]);
  return s;
}

ModularSurrogate subgradient(const SetFunction& oracle, const Permutation& pi) {
  const int n = oracle.n();
  if (pi.n() != n) throw ParameterError("permutation size does not match oracle");
  ModularSurrogate h;
  h.weights.assign(n, 0.0);
  h.direction = BoundDirection::lower;
  Subset chain(n);
  double prev = 0.0;
  for (int i = 0; i < n; ++i) {
    chain.add(pi.at(i));
    const double cur = oracle.eval(chain);
    h.weights[pi.at(i)] = cur - prev;
    prev = cur;
  }
  h.anchor = chain;  // tight on every prefix; V is always one of them
  return h;
}

ModularSurrogate upper_bound_1(const SetFunction& oracle, const Subset& x) {
  const int n = oracle.n();
  ModularSurrogate m;
  m.weights.assign(n, 0.0);
  m.anchor = x;
  m.direction = BoundDirection::upper;
  const Subset empty(n);
  m.offset = oracle.eval(x);
  for (int j = 0; j < n; ++j) {
    if (x.contains(j)) {
      m.weights[j] = oracle.gain(j, x.without(j));
      m.offset -= m.weights[j];
    } else {
      m.weights[j] = oracle.gain(j, empty);
    }
  }
  return m;
}

ModularSurrogate upper_bound_2(const SetFunction& oracle, const Subset& x) {
  const int n = oracle.n();
  ModularSurrogate m;
  m.weights.assign(n, 0.0);
  m.anchor = x;
  m.direction = BoundDirection::upper;
  const Subset full = Subset::full(n);
  m.offset = oracle.eval(x);
  for (int j = 0; j < n; ++j) {
    if (x.contains(j)) {
      m.weights[j] = oracle.gain(j, full.without(j));
      m.offset -= m.weights[j];
    } else {
      m.weights[j] = oracle.gain(j, x);
    }
  }
  return m;
}

namespace {

class CurveNormalizedOracle : public SetFunction {
 public:
  CurveNormalizedOracle(OraclePtr inner, double kappa, std::vector<double> singletons)
      : SetFunction(inner->n()),
        inner_(std::move(inner)),
        kappa_(kappa),
        singletons_(std::move(singletons)) {}

  std::string kind() const override { return "curve_normalized"; }

 protected:
  double do_eval(const Subset& x) const override {
    double modular = 0.0;
    for (int j : x.elements()) modular += singletons_[j];
    return (inner_->eval(x) - (1.0 - kappa_) * modular) / kappa_;
  }

 private:
  OraclePtr inner_;
  double kappa_;
  std::vector<double> singletons_;
};

}  // namespace

OraclePtr curve_normalize(OraclePtr oracle) {
  const double kappa = curvature(*oracle);
  if (kappa <= kTol) {
    throw ParameterError("curve normalization needs kappa_f > 0 (f is modular)");
  }
  std::vector<double> singletons(oracle->n());
  for (int j = 0; j < oracle->n(); ++j) singletons[j] = oracle->singleton(j);
  return std::make_shared<CurveNormalizedOracle>(std::move(oracle), kappa,
                                                 std::move(singletons));
}

EASurrogate::EASurrogate(double kappa, std::vector<double> ea_weights,
                         std::vector<double> singleton_weights)
    : SetFunction(static_cast<int>(ea_weights.size())),
      kappa_(kappa),
      ea_weights_(std::move(ea_weights)),
      singleton_weights_(std::move(singleton_weights)) {
  if (kappa_ <= kTol || kappa_ > 1.0) {
    throw ParameterError("EA surrogate needs kappa in (0,1]");
  }
  if (singleton_weights_.size() != ea_weights_.size()) {
    throw ParameterError("EA and singleton weight counts differ");
  }
  for (double w : ea_weights_) {
    if (w < 0.0) throw ParameterError("EA weights must be nonnegative");
  }
}

double EASurrogate::do_eval(const Subset& x) const {
  double w = 0.0;
  double modular = 0.0;
  for (int j : x.elements()) {
    w += ea_weights_[j];
    modular += singleton_weights_[j];
  }
  return kappa_ * std::sqrt(w) + (1.0 - kappa_) * modular;
}

EASurrogate ea_surrogate(const SetFunction& oracle, std::vector<double> ea_weights) {
  const double kappa = curvature(oracle);
  if (kappa <= kTol) {
    throw ParameterError("EA surrogate rejected for modular f; use it directly");
  }
  if (static_cast<int>(ea_weights.size()) != oracle.n()) {
    throw ParameterError("one EA weight per element required");
  }
  std::vector<double> singletons(oracle.n());
  for (int j = 0; j < oracle.n(); ++j) singletons[j] = oracle.singleton(j);
  return EASurrogate(kappa, std::move(ea_weights), std::move(singletons));
}

std::vector<double> default_ea_weights(const SetFunction& oracle) {
  // f^kappa({j}) = f({j}) for every j, so the heuristic square is taken on
  // the plain singletons.
  std::vector<double> w(oracle.n());
  for (int j = 0; j < oracle.n(); ++j) {
    const double s = oracle.singleton(j);
    w[j] = s * s;
  }
  return w;
}

}  // namespace subcons

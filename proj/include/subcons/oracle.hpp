#pragma once

#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "subcons/subset.hpp"

namespace subcons {

// A normalized monotone set function over a fixed ground set. Evaluation is
// pure; instances are immutable after construction and safe to share across
// threads.
class SetFunction {
 public:
  explicit SetFunction(int n) : n_(n) {
    if (n < 1) throw InstanceError("ground set size must be positive");
  }
  virtual ~SetFunction() = default;

  int n() const { return n_; }

  double eval(const Subset& x) const {
    if (x.n() != n_) throw InstanceError("subset ground set does not match oracle");
    return do_eval(x);
  }

  // f(j | X) = f(X u {j}) - f(X). Always the literal subtraction, so the gain
  // identity holds bit-for-bit.
  double gain(int j, const Subset& x) const { return eval(x.with(j)) - eval(x); }

  double singleton(int j) const { return eval(Subset(n_).with(j)); }

  virtual std::string kind() const = 0;
  virtual nlohmann::json params() const;  // default: throws (not serializable)

 protected:
  virtual double do_eval(const Subset& x) const = 0;

 private:
  int n_;
};

using OraclePtr = std::shared_ptr<const SetFunction>;

// --- Catalog entries -------------------------------------------------------

class ModularOracle : public SetFunction {
 public:
  ModularOracle(std::vector<double> weights);
  std::string kind() const override { return "modular"; }
  nlohmann::json params() const override;
  const std::vector<double>& weights() const { return weights_; }

 protected:
  double do_eval(const Subset& x) const override;

 private:
  std::vector<double> weights_;
};

// sum_i max_{j in X} S[i][j], zero on the empty set.
class FacilityLocationOracle : public SetFunction {
 public:
  // similarity is row-major n*n, entries >= 0.
  FacilityLocationOracle(int n, std::vector<double> similarity);
  std::string kind() const override { return "facility_location"; }
  nlohmann::json params() const override;
  double sim(int i, int j) const { return similarity_[static_cast<std::size_t>(i) * n() + j]; }

 protected:
  double do_eval(const Subset& x) const override;

 private:
  std::vector<double> similarity_;
};

// sum_i min{ sum_{j in X} S[i][j], alpha * sum_{j in V} S[i][j] }.
class SaturatedSumOracle : public SetFunction {
 public:
  SaturatedSumOracle(int n, std::vector<double> similarity, double alpha);
  std::string kind() const override { return "saturated_sum"; }
  nlohmann::json params() const override;

 protected:
  double do_eval(const Subset& x) const override;

 private:
  std::vector<double> similarity_;
  std::vector<double> row_caps_;
  double alpha_;
};

// Weighted neighborhood |Gamma(X)| on a bipartite utterance->word graph.
class BipartiteNeighborhoodOracle : public SetFunction {
 public:
  BipartiteNeighborhoodOracle(int n, int n_words,
                              std::vector<std::vector<int>> adjacency,
                              std::vector<double> word_weights);
  std::string kind() const override { return "bipartite_neighborhood"; }
  nlohmann::json params() const override;
  int n_words() const { return n_words_; }

 protected:
  double do_eval(const Subset& x) const override;

 private:
  int n_words_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<double> word_weights_;
};

// sqrt(w(X)) for nonnegative weights w.
class SqrtModularOracle : public SetFunction {
 public:
  SqrtModularOracle(std::vector<double> weights);
  std::string kind() const override { return "sqrt_modular"; }
  nlohmann::json params() const override;

 protected:
  double do_eval(const Subset& x) const override;

 private:
  std::vector<double> weights_;
};

// min{|X|, alpha}.
class CardTruncationOracle : public SetFunction {
 public:
  CardTruncationOracle(int n, double alpha);
  std::string kind() const override { return "card_truncation"; }
  nlohmann::json params() const override;

 protected:
  double do_eval(const Subset& x) const override;

 private:
  double alpha_;
};

// min{g(X), alpha} around an inner oracle.
class TruncationOracle : public SetFunction {
 public:
  TruncationOracle(OraclePtr inner, double alpha);
  std::string kind() const override { return "truncation"; }
  nlohmann::json params() const override;

 protected:
  double do_eval(const Subset& x) const override;

 private:
  OraclePtr inner_;
  double alpha_;
};

class SumOracle : public SetFunction {
 public:
  SumOracle(std::vector<OraclePtr> terms);
  std::string kind() const override { return "sum"; }
  nlohmann::json params() const override;

 protected:
  double do_eval(const Subset& x) const override;

 private:
  std::vector<OraclePtr> terms_;
};

// f(X) = kappa * min{|X|, alpha} + (1 - kappa) * |X|.
class HardnessPlainOracle : public SetFunction {
 public:
  HardnessPlainOracle(int n, double kappa, int alpha);
  std::string kind() const override { return "hardness_plain"; }
  nlohmann::json params() const override;
  int alpha() const { return alpha_; }

 protected:
  double do_eval(const Subset& x) const override;

 private:
  double kappa_;
  int alpha_;
};

// f_R(X) = kappa * min{beta + |X n R~|, |X|, alpha} + (1 - kappa) * |X|,
// with |R| = alpha.
class HardnessHiddenOracle : public SetFunction {
 public:
  HardnessHiddenOracle(int n, double kappa, int alpha, int beta, Subset hidden);
  std::string kind() const override { return "hardness_hidden"; }
  nlohmann::json params() const override;
  const Subset& hidden() const { return hidden_; }

 protected:
  double do_eval(const Subset& x) const override;

 private:
  double kappa_;
  int alpha_;
  int beta_;
  Subset hidden_;
};

// Restriction of an oracle to a subset of its ground set; used by the
// preprocessing helper that removes zero-singleton elements.
class RestrictionOracle : public SetFunction {
 public:
  RestrictionOracle(OraclePtr inner, std::vector<int> kept);
  std::string kind() const override { return "restriction"; }
  const std::vector<int>& kept() const { return kept_; }

 protected:
  double do_eval(const Subset& x) const override;

 private:
  OraclePtr inner_;
  std::vector<int> kept_;
};

// --- Serialization & helpers ----------------------------------------------

nlohmann::json oracle_to_json(const SetFunction& oracle);
OraclePtr oracle_from_json(int n, const nlohmann::json& j);

// Validates normalization (f(empty)=0) and positive singletons; throws
// InstanceError on violation.
void validate_oracle(const SetFunction& oracle);

// Drops elements with zero singleton value, returning the restricted oracle
// and the surviving element ids.
std::pair<OraclePtr, std::vector<int>> strip_zero_singletons(OraclePtr oracle);

}  // namespace subcons

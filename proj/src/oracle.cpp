#include "subcons/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <nlohmann/json.hpp>

namespace subcons {

using nlohmann::json;

json SetFunction::params() const {
  throw ParameterError("oracle kind '" + kind() + "' is not serializable");
}

// --- Modular ---------------------------------------------------------------

ModularOracle::ModularOracle(std::vector<double> weights)
    : SetFunction(static_cast<int>(weights.size())), weights_(std::move(weights)) {
  for (double w : weights_) {
    if (w < 0.0) throw ParameterError("modular weights must be nonnegative");
  }
}

double ModularOracle::do_eval(const Subset& x) const {
  double s = 0.0;
  for (int j : x.elements()) s += weights_[j];
  return s;
}

json ModularOracle::params() const { return json{{"weights", weights_}}; }

// --- Facility location ------------------------------------------------------

FacilityLocationOracle::FacilityLocationOracle(int n, std::vector<double> similarity)
    : SetFunction(n), similarity_(std::move(similarity)) {
  if (similarity_.size() != static_cast<std::size_t>(n) * n) {
    throw ParameterError("similarity matrix must be n*n row-major");
  }
  for (double s : similarity_) {
    if (s < 0.0) throw ParameterError("similarity entries must be nonnegative");
  }
}

double FacilityLocationOracle::do_eval(const Subset& x) const {
  if (x.empty()) return 0.0;
  const auto elems = x.elements();
  double total = 0.0;
  for (int i = 0; i < n(); ++i) {
    double best = 0.0;
    for (int j : elems) best = std::max(best, sim(i, j));
    total += best;
  }
  return total;
}

json FacilityLocationOracle::params() const { return json{{"similarity", similarity_}}; }

// --- Saturated sum ----------------------------------------------------------

SaturatedSumOracle::SaturatedSumOracle(int n, std::vector<double> similarity, double alpha)
    : SetFunction(n), similarity_(std::move(similarity)), alpha_(alpha) {
  if (similarity_.size() != static_cast<std::size_t>(n) * n) {
    throw ParameterError("similarity matrix must be n*n row-major");
  }
  if (alpha <= 0.0 || alpha > 1.0) {
    throw ParameterError("saturation fraction must lie in (0,1]");
  }
  row_caps_.resize(n);
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) row += similarity_[static_cast<std::size_t>(i) * n + j];
    row_caps_[i] = alpha_ * row;
  }
}

double SaturatedSumOracle::do_eval(const Subset& x) const {
  const auto elems = x.elements();
  double total = 0.0;
  for (int i = 0; i < n(); ++i) {
    double row = 0.0;
    for (int j : elems) row += similarity_[static_cast<std::size_t>(i) * n() + j];
    total += std::min(row, row_caps_[i]);
  }
  return total;
}

json SaturatedSumOracle::params() const {
  return json{{"similarity", similarity_}, {"alpha", alpha_}};
}

// --- Bipartite neighborhood -------------------------------------------------

BipartiteNeighborhoodOracle::BipartiteNeighborhoodOracle(
    int n, int n_words, std::vector<std::vector<int>> adjacency,
    std::vector<double> word_weights)
    : SetFunction(n),
      n_words_(n_words),
      adjacency_(std::move(adjacency)),
      word_weights_(std::move(word_weights)) {
  if (n_words_ < 1) throw ParameterError("word set must be nonempty");
  if (adjacency_.size() != static_cast<std::size_t>(n)) {
    throw ParameterError("adjacency must have one word list per utterance");
  }
  if (word_weights_.size() != static_cast<std::size_t>(n_words_)) {
    throw ParameterError("one weight per word required");
  }
  for (double w : word_weights_) {
    if (w < 0.0) throw ParameterError("word weights must be nonnegative");
  }
  for (const auto& words : adjacency_) {
    for (int w : words) {
      if (w < 0 || w >= n_words_) throw ParameterError("word id out of range");
    }
  }
}

double BipartiteNeighborhoodOracle::do_eval(const Subset& x) const {
  std::vector<bool> seen(n_words_, false);
  double total = 0.0;
  for (int j : x.elements()) {
    for (int w : adjacency_[j]) {
      if (!seen[w]) {
        seen[w] = true;
        total += word_weights_[w];
      }
    }
  }
  return total;
}

json BipartiteNeighborhoodOracle::params() const {
  return json{{"n_words", n_words_},
              {"adjacency", adjacency_},
              {"word_weights", word_weights_}};
}

// --- Sqrt-modular ------------------------------------------------------------

SqrtModularOracle::SqrtModularOracle(std::vector<double> weights)
    : SetFunction(static_cast<int>(weights.size())), weights_(std::move(weights)) {
  for (double w : weights_) {
    if (w < 0.0) throw ParameterError("sqrt-modular weights must be nonnegative");
  }
}

double SqrtModularOracle::do_eval(const Subset& x) const {
  double s = 0.0;
  for (int j : x.elements()) s += weights_[j];
  return std::sqrt(s);
}

json SqrtModularOracle::params() const { return json{{"weights", weights_}}; }

// --- Cardinality truncation ---------------------------------------------------

CardTruncationOracle::CardTruncationOracle(int n, double alpha)
    : SetFunction(n), alpha_(alpha) {
  if (alpha <= 0.0) throw ParameterError("truncation cap must be positive");
}

double CardTruncationOracle::do_eval(const Subset& x) const {
  return std::min(static_cast<double>(x.card()), alpha_);
}

json CardTruncationOracle::params() const { return json{{"alpha", alpha_}}; }

// --- Truncation ---------------------------------------------------------------

TruncationOracle::TruncationOracle(OraclePtr inner, double alpha)
    : SetFunction(inner ? inner->n() : 0), inner_(std::move(inner)), alpha_(alpha) {
  if (alpha <= 0.0) throw ParameterError("truncation cap must be positive");
  if (alpha > inner_->eval(Subset::full(n())) + kTol) {
    throw ParameterError("truncation cap exceeds the oracle's full-set value");
  }
}

double TruncationOracle::do_eval(const Subset& x) const {
  return std::min(inner_->eval(x), alpha_);
}

json TruncationOracle::params() const {
  return json{{"alpha", alpha_}, {"inner", oracle_to_json(*inner_)}};
}

// --- Sum ------------------------------------------------------------------------

SumOracle::SumOracle(std::vector<OraclePtr> terms)
    : SetFunction(terms.empty() ? 0 : terms.front()->n()), terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (t->n() != n()) throw ParameterError("sum terms must share one ground set");
  }
}

double SumOracle::do_eval(const Subset& x) const {
  double s = 0.0;
  for (const auto& t : terms_) s += t->eval(x);
  return s;
}

json SumOracle::params() const {
  json terms = json::array();
  for (const auto& t : terms_) terms.push_back(oracle_to_json(*t));
  return json{{"terms", std::move(terms)}};
}

// --- Hardness fixtures ------------------------------------------------------------

HardnessPlainOracle::HardnessPlainOracle(int n, double kappa, int alpha)
    : SetFunction(n), kappa_(kappa), alpha_(alpha) {
  if (kappa < 0.0 || kappa > 1.0) throw ParameterError("kappa must lie in [0,1]");
  if (alpha < 1) throw ParameterError("alpha must be a positive integer");
}

double HardnessPlainOracle::do_eval(const Subset& x) const {
  double card = x.card();
  return kappa_ * std::min(card, static_cast<double>(alpha_)) + (1.0 - kappa_) * card;
}

json HardnessPlainOracle::params() const {
  return json{{"kappa", kappa_}, {"alpha", alpha_}};
}

HardnessHiddenOracle::HardnessHiddenOracle(int n, double kappa, int alpha, int beta,
                                           Subset hidden)
    : SetFunction(n), kappa_(kappa), alpha_(alpha), beta_(beta), hidden_(std::move(hidden)) {
  if (kappa < 0.0 || kappa > 1.0) throw ParameterError("kappa must lie in [0,1]");
  if (alpha < 1 || beta < 1) throw ParameterError("alpha and beta must be positive");
  if (hidden_.n() != n || hidden_.card() != alpha) {
    throw ParameterError("hidden set must have cardinality alpha");
  }
}

double HardnessHiddenOracle::do_eval(const Subset& x) const {
  double card = x.card();
  double outside = card - x.intersection_card(hidden_);
  double inner = std::min({beta_ + outside, card, static_cast<double>(alpha_)});
  return kappa_ * inner + (1.0 - kappa_) * card;
}

json HardnessHiddenOracle::params() const {
  return json{{"kappa", kappa_},
              {"alpha", alpha_},
              {"beta", beta_},
              {"hidden", hidden_.elements()}};
}

// --- Restriction --------------------------------------------------------------------

RestrictionOracle::RestrictionOracle(OraclePtr inner, std::vector<int> kept)
    : SetFunction(static_cast<int>(kept.size())), inner_(std::move(inner)), kept_(std::move(kept)) {
  for (int j : kept_) {
    if (j < 0 || j >= inner_->n()) throw ParameterError("kept element out of range");
  }
}

double RestrictionOracle::do_eval(const Subset& x) const {
  Subset mapped(inner_->n());
  for (int j : x.elements()) mapped.add(kept_[j]);
  return inner_->eval(mapped);
}

// --- Serialization -------------------------------------------------------------------

json oracle_to_json(const SetFunction& oracle) {
  json j = oracle.params();
  j["kind"] = oracle.kind();
  return j;
}

OraclePtr oracle_from_json(int n, const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "modular") {
    auto w = j.at("weights").get<std::vector<double>>();
    if (static_cast<int>(w.size()) != n) throw InstanceError("weight count != n");
    return std::make_shared<ModularOracle>(std::move(w));
  }
  if (kind == "facility_location") {
    return std::make_shared<FacilityLocationOracle>(
        n, j.at("similarity").get<std::vector<double>>());
  }
  if (kind == "saturated_sum") {
    return std::make_shared<SaturatedSumOracle>(
        n, j.at("similarity").get<std::vector<double>>(), j.at("alpha").get<double>());
  }
  if (kind == "bipartite_neighborhood") {
    return std::make_shared<BipartiteNeighborhoodOracle>(
        n, j.at("n_words").get<int>(),
        j.at("adjacency").get<std::vector<std::vector<int>>>(),
        j.at("word_weights").get<std::vector<double>>());
  }
  if (kind == "sqrt_modular") {
    auto w = j.at("weights").get<std::vector<double>>();
    if (static_cast<int>(w.size()) != n) throw InstanceError("weight count != n");
    return std::make_shared<SqrtModularOracle>(std::move(w));
  }
  if (kind == "card_truncation") {
    return std::make_shared<CardTruncationOracle>(n, j.at("alpha").get<double>());
  }
  if (kind == "truncation") {
    return std::make_shared<TruncationOracle>(oracle_from_json(n, j.at("inner")),
                                              j.at("alpha").get<double>());
  }
  if (kind == "sum") {
    std::vector<OraclePtr> terms;
    for (const auto& t : j.at("terms")) terms.push_back(oracle_from_json(n, t));
    return std::make_shared<SumOracle>(std::move(terms));
  }
  if (kind == "hardness_plain") {
    return std::make_shared<HardnessPlainOracle>(n, j.at("kappa").get<double>(),
                                                 j.at("alpha").get<int>());
  }
  if (kind == "hardness_hidden") {
    Subset hidden(n);
    for (int e : j.at("hidden").get<std::vector<int>>()) hidden.add(e);
    return std::make_shared<HardnessHiddenOracle>(n, j.at("kappa").get<double>(),
                                                  j.at("alpha").get<int>(),
                                                  j.at("beta").get<int>(), std::move(hidden));
  }
  throw InstanceError("unknown oracle kind '" + kind + "'");
}

// --- Validation helpers -----------------------------------------------------------------

void validate_oracle(const SetFunction& oracle) {
  if (std::abs(oracle.eval(Subset(oracle.n()))) > kTol) {
    throw InstanceError("oracle is not normalized: f(empty) != 0");
  }
  for (int j = 0; j < oracle.n(); ++j) {
    if (oracle.singleton(j) <= kTol) {
      throw InstanceError("oracle has a non-positive singleton at element " +
                          std::to_string(j) + "; strip it before solving");
    }
  }
}

std::pair<OraclePtr, std::vector<int>> strip_zero_singletons(OraclePtr oracle) {
  std::vector<int> kept;
  for (int j = 0; j < oracle->n(); ++j) {
    if (oracle->singleton(j) > kTol) kept.push_back(j);
  }
  if (kept.empty()) throw InstanceError("all singleton values are zero");
  if (static_cast<int>(kept.size()) == oracle->n()) return {oracle, kept};
  return {std::make_shared<RestrictionOracle>(std::move(oracle), kept), kept};
}

}  // namespace subcons

#include "subcons/instance.hpp"

#include <fstream>
#include <limits>

#include <nlohmann/json.hpp>

namespace subcons {

using nlohmann::json;

namespace {

double min_singleton(const SetFunction& fn) {
  double m = std::numeric_limits<double>::infinity();
  for (int j = 0; j < fn.n(); ++j) m = std::min(m, fn.singleton(j));
  return m;
}

}  // namespace

void InstanceSpec::validate() const {
  if (!f || !g) throw InstanceError("instance needs both f and g");
  if (f->n() != n || g->n() != n) {
    throw InstanceError("oracle ground sets do not match n");
  }
  if (cover.has_value() == budget.has_value()) {
    throw InstanceError("exactly one of cover or budget is required");
  }
  validate_oracle(*f);
  validate_oracle(*g);
  if (cover) {
    const double c = *cover;
    if (c < min_singleton(*g) - kTol || c > g->eval(Subset::full(n)) + kTol) {
      throw InstanceError("degenerate cover: need min_j g(j) <= c <= g(V)");
    }
  } else {
    const double b = *budget;
    if (b < min_singleton(*f) - kTol || b > f->eval(Subset::full(n)) + kTol) {
      throw InstanceError("degenerate budget: need min_j f(j) <= b <= f(V)");
    }
  }
}

json instance_to_json(const InstanceSpec& spec) {
  json bound;
  if (spec.cover) {
    bound = json{{"cover", *spec.cover}};
  } else if (spec.budget) {
    bound = json{{"budget", *spec.budget}};
  } else {
    throw InstanceError("instance has no bound");
  }
  return json{{"n", spec.n},
              {"f", oracle_to_json(*spec.f)},
              {"g", oracle_to_json(*spec.g)},
              {"bound", std::move(bound)},
              {"seed", spec.seed}};
}

InstanceSpec instance_from_json(const json& j) {
  InstanceSpec spec;
  spec.n = j.at("n").get<int>();
  spec.f = oracle_from_json(spec.n, j.at("f"));
  spec.g = oracle_from_json(spec.n, j.at("g"));
  const json& bound = j.at("bound");
  if (bound.contains("cover")) spec.cover = bound.at("cover").get<double>();
  if (bound.contains("budget")) spec.budget = bound.at("budget").get<double>();
  spec.seed = j.value("seed", std::uint64_t{0});
  spec.validate();
  return spec;
}

InstanceSpec load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InstanceError("cannot open instance file: " + path);
  json j;
  in >> j;
  return instance_from_json(j);
}

void save_instance(const InstanceSpec& spec, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InstanceError("cannot write instance file: " + path);
  out << instance_to_json(spec).dump(2) << '\n';
}

}  // namespace subcons

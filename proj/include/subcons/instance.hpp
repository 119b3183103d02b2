#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "subcons/oracle.hpp"

namespace subcons {

// A self-contained problem description: cost f, coverage g, and exactly one
// of a cover target (SCSC) or a budget (SCSK).
struct InstanceSpec {
  int n = 0;
  OraclePtr f;
  OraclePtr g;
  std::optional<double> cover;
  std::optional<double> budget;
  std::uint64_t seed = 0;

  bool is_cover() const { return cover.has_value(); }

  // Rejects degenerate bounds: min_j g(j) <= c <= g(V) for SCSC and
  // min_j f(j) <= b <= f(V) for SCSK. Also validates both oracles.
  void validate() const;
};

nlohmann::json instance_to_json(const InstanceSpec& spec);
InstanceSpec instance_from_json(const nlohmann::json& j);

InstanceSpec load_instance(const std::string& path);
void save_instance(const InstanceSpec& spec, const std::string& path);

}  // namespace subcons

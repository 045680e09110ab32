#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "suncs/fock.hpp"

namespace suncs {

struct RunConfig {
  int n = 0;
  std::vector<int> c;
  std::uint64_t seed = 0;
  std::uint64_t samples = 100000;
  std::map<std::string, double> tolerances;
  std::uint64_t sector_cap = kDefaultSectorCap;

  double tol(const std::string& name, double fallback) const;
  IrrepLabel label() const;

  // throws std::invalid_argument on malformed input
  void require_n() const;
  void require_label() const;

  static RunConfig from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

// parses "name=value" pairs from --tol
void apply_tolerance_flags(RunConfig& config,
                           const std::vector<std::string>& flags);

std::vector<int> parse_int_list(const std::string& text);

struct Check {
  std::string name;
  bool pass = false;
  double value = 0.0;
  double tolerance = 0.0;
  std::string note;  // optional context, e.g. which sector failed
};

struct Report {
  std::string command;
  RunConfig config;
  std::vector<Check> checks;
  nlohmann::json payload;  // command-specific evidence
  double wall_time_ms = 0.0;

  bool pass() const;
  nlohmann::json to_json() const;
};

Report cmd_algebra(const RunConfig& config);
Report cmd_irrep(const RunConfig& config);
Report cmd_coherent(const RunConfig& config);
Report cmd_identity(const RunConfig& config);

}  // namespace suncs

#include "suncs/report.hpp"

#include <sstream>
#include <stdexcept>

namespace suncs {

double RunConfig::tol(const std::string& name, double fallback) const {
  auto it = tolerances.find(name);
  return it == tolerances.end() ? fallback : it->second;
}

IrrepLabel RunConfig::label() const { return IrrepLabel{n, c}; }

void RunConfig::require_n() const {
  if (n < 2) throw std::invalid_argument("group rank too small");
}

void RunConfig::require_label() const {
  require_n();
  if (static_cast<int>(c.size()) != n - 1)
    throw std::invalid_argument("label length must be N-1 (use --c)");
  for (int v : c)
    if (v < 0) throw std::invalid_argument("label entries must be nonnegative");
}

RunConfig RunConfig::from_json(const nlohmann::json& j) {
  RunConfig config;
  config.n = j.value("n", 0);
  config.c = j.value("c", std::vector<int>{});
  config.seed = j.value("seed", std::uint64_t{0});
  config.samples = j.value("samples", std::uint64_t{100000});
  config.sector_cap = j.value("sectorCap", kDefaultSectorCap);
  if (j.contains("tolerances"))
    for (const auto& [k, v] : j.at("tolerances").items())
      config.tolerances[k] = v.get<double>();
  return config;
}

nlohmann::json RunConfig::to_json() const {
  nlohmann::json tols = nlohmann::json::object();
  for (const auto& [k, v] : tolerances) tols[k] = v;
  return {{"n", n},           {"c", c},
          {"seed", seed},     {"samples", samples},
          {"sectorCap", sector_cap}, {"tolerances", tols}};
}

void apply_tolerance_flags(RunConfig& config,
                           const std::vector<std::string>& flags) {
  for (const std::string& flag : flags) {
    const auto eq = flag.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == flag.size())
      throw std::invalid_argument("expected --tol name=value, got: " + flag);
    const std::string name = flag.substr(0, eq);
    try {
      config.tolerances[name] = std::stod(flag.substr(eq + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad tolerance value in: " + flag);
    }
  }
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty entry in list: " + text);
    std::size_t used = 0;
    const int v = std::stoi(item, &used);
    if (used != item.size())
      throw std::invalid_argument("bad integer in list: " + text);
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

bool Report::pass() const {
  for (const Check& c : checks)
    if (!c.pass) return false;
  return true;
}

nlohmann::json Report::to_json() const {
  nlohmann::json checks_json = nlohmann::json::array();
  for (const Check& c : checks) {
    nlohmann::json jc = {{"name", c.name},
                         {"pass", c.pass},
                         {"value", c.value},
                         {"tolerance", c.tolerance}};
    if (!c.note.empty()) jc["note"] = c.note;
    checks_json.push_back(jc);
  }
  return {{"schemaVersion", 1},
          {"command", command},
          {"config", config.to_json()},
          {"checks", checks_json},
          {"pass", pass()},
          {"payload", payload},
          {"wallTimeMs", wall_time_ms}};
}

}  // namespace suncs

#include "smoothbound/report.hpp"

#include <stdexcept>

namespace smoothbound {

std::string_view to_string(BoundDirection d) {
  return d == BoundDirection::lower ? "lower" : "upper";
}

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::asserted:
      return "asserted";
    case CheckStatus::reported:
      return "reported";
    case CheckStatus::premise_failed:
      return "premise-failed";
  }
  return "reported";
}

void BoundReport::add_bound(const std::string& name, double log_value, BoundDirection dir,
                            CheckStatus status) {
  bound_logs[name] = log_value;
  directions[name] = dir;
  flags[name] = status;
  if (exact_log) margins[name] = log_value - *exact_log;
}

void BoundReport::set_exact_log(double log_value) {
  exact_log = log_value;
  margins.clear();
  for (const auto& [name, value] : bound_logs) margins[name] = value - log_value;
}

bool BoundReport::holds(const std::string& name) const {
  const double margin = margins.at(name);
  return directions.at(name) == BoundDirection::lower ? margin <= 0.0 : margin >= 0.0;
}

nlohmann::ordered_json BoundReport::to_json() const {
  nlohmann::ordered_json j;
  j["inputs"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : inputs) j["inputs"][k] = v;
  j["exact_log"] = exact_log ? nlohmann::ordered_json(*exact_log) : nlohmann::ordered_json();
  j["bound_logs"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : bound_logs) j["bound_logs"][k] = v;
  j["margins"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : margins) j["margins"][k] = v;
  j["directions"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : directions) j["directions"][k] = std::string(to_string(v));
  j["flags"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : flags) j["flags"][k] = std::string(to_string(v));
  j["counts"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : counts) j["counts"][k] = v;
  return j;
}

}  // namespace smoothbound

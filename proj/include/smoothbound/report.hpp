#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

namespace smoothbound {

// Which side of the exact quantity a bound formula claims to sit on.
enum class BoundDirection { lower, upper };

// How a bound is treated by the verification layer.
enum class CheckStatus { asserted, reported, premise_failed };

std::string_view to_string(BoundDirection d);
std::string_view to_string(CheckStatus s);

// Pairs an exact quantity (in natural-log space, when known) with any number
// of bound formulas. Margins are bound minus exact, so a lower bound holds
// when its margin is <= 0 and an upper bound when it is >= 0.
struct BoundReport {
  std::map<std::string, double> inputs;
  std::optional<double> exact_log;
  std::map<std::string, double> bound_logs;
  std::map<std::string, BoundDirection> directions;
  std::map<std::string, double> margins;
  std::map<std::string, CheckStatus> flags;
  // Exact integers that back the log values, as decimal strings.
  std::map<std::string, std::string> counts;

  void add_bound(const std::string& name, double log_value, BoundDirection dir,
                 CheckStatus status = CheckStatus::reported);
  void set_exact_log(double log_value);

  // True when the named bound sits on its claimed side of exact_log.
  // Throws std::out_of_range if there is no such bound or no exact value.
  bool holds(const std::string& name) const;

  nlohmann::ordered_json to_json() const;
};

}  // namespace smoothbound

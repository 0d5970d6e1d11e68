#include <cmath>
#include <cstdlib>
#include <string>

#include "smoothbound/errors.hpp"
#include "smoothbound/harness.hpp"

namespace smoothbound {
namespace {

constexpr double kDefaultGuard = 1e8;

void require_nonempty(const std::vector<double>& axis, const char* name) {
  if (axis.empty()) throw InvalidArgument(std::string("grid axis ") + name + " is empty");
  for (double v : axis) {
    if (!std::isfinite(v)) throw InvalidArgument(std::string("grid axis ") + name + " has a non-finite value");
  }
}

}  // namespace

void ExperimentGrid::validate(bool needs_nN, bool needs_cM) const {
  if (needs_nN) {
    require_nonempty(n_values, "n_values");
    require_nonempty(N_values, "N_values");
  }
  if (needs_cM) {
    require_nonempty(c_values, "c_values");
    require_nonempty(M_values, "M_values");
  }
  const double g = option("guard", kDefaultGuard);
  if (!(g >= 1.0) || !std::isfinite(g)) throw InvalidArgument("guard must be a positive integer");
}

double ExperimentGrid::option(const std::string& name, double fallback) const {
  auto it = options.find(name);
  return it == options.end() ? fallback : it->second;
}

std::uint64_t ExperimentGrid::guard() const {
  return static_cast<std::uint64_t>(option("guard", kDefaultGuard));
}

void ExperimentGrid::merge_json(const nlohmann::json& config) {
  if (!config.is_object()) throw InvalidArgument("config must be a JSON object");
  auto axis = [&](const char* key, std::vector<double>& target) {
    if (!config.contains(key)) return;
    const auto& v = config.at(key);
    if (!v.is_array()) throw InvalidArgument(std::string("config key ") + key + " must be an array");
    target.clear();
    for (const auto& x : v) {
      if (!x.is_number()) throw InvalidArgument(std::string("config key ") + key + " must hold numbers");
      target.push_back(x.get<double>());
    }
  };
  axis("n_values", n_values);
  axis("N_values", N_values);
  axis("c_values", c_values);
  axis("M_values", M_values);
  if (config.contains("options")) {
    const auto& opts = config.at("options");
    if (!opts.is_object()) throw InvalidArgument("config key options must be an object");
    for (const auto& [k, v] : opts.items()) {
      if (!v.is_number()) throw InvalidArgument("option " + k + " must be numeric");
      options[k] = v.get<double>();
    }
  }
}

ExperimentGrid default_sandwich_grid() {
  ExperimentGrid g;
  g.n_values = {10, 20, 35, 50};
  g.N_values = {1e3, 1e4, 1e5};
  g.options["guard"] = kDefaultGuard;
  return g;
}

ExperimentGrid default_bound_scan_grid() {
  ExperimentGrid g;
  g.n_values = {20, 50, 100, 200};
  g.N_values = {1e4, 1e5, 1e6};
  g.options = {{"guard", kDefaultGuard}, {"delta", 0.0}, {"a_bar", 0.0}};
  return g;
}

ExperimentGrid default_aux_scan_grid() {
  ExperimentGrid g;
  g.c_values = {1.5, 2.5, 3.3, 4.5, 4.8, 6.7};
  g.M_values = {2, 5, 10, 15, 20};
  g.options = {{"guard", kDefaultGuard}, {"alpha", 0.1}, {"beta", 0.4}, {"q", 1.1}};
  return g;
}

std::optional<std::uint64_t> guard_from_environment() {
  const char* raw = std::getenv("SMOOTHBOUND_GUARD");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || v == 0) throw InvalidArgument("SMOOTHBOUND_GUARD must be a positive integer");
  return v;
}

}  // namespace smoothbound

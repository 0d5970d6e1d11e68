#include <cmath>
#include <functional>

#include "common.hpp"
#include "smoothbound/bounds.hpp"
#include "smoothbound/harness.hpp"

namespace smoothbound {

const std::vector<std::string> kBoundScanColumns = {
    "n",              "N",                 "q",                "nu",
    "log_ratio",      "lower_rhs",         "lower_margin",     "upper_rhs",
    "upper_margin",   "upper_tail_rhs",    "upper_tail_margin", "sqrt_condition",
    "trend_exponent", "ladder4_lower_rhs", "ladder4_upper_rhs", "logsq_alpha",
    "logsq_c_needed", "log_square_rhs",       "status",           "note"};

namespace {

// Evaluates one column; domain problems become a null cell plus a note.
void try_cell(nlohmann::ordered_json& row, std::string& notes, const char* column,
              const std::function<double()>& eval) {
  try {
    row[column] = eval();
  } catch (const std::exception& e) {
    row[column] = nullptr;
    if (!notes.empty()) notes += "; ";
    notes += std::string(column) + ": " + e.what();
  }
}

}  // namespace

CommandResult run_bound_scan(const ExperimentGrid& grid) {
  const double log_power = grid.option("log_power", 0.0);
  const bool power_mode = log_power > 0.0;
  grid.validate(!power_mode, false);
  if (power_mode && grid.N_values.empty()) throw InvalidArgument("grid axis N_values is empty");

  // In power mode each N gets its own n = (ln N)^q.
  std::vector<std::pair<double, double>> cells;
  for (double N : grid.N_values) {
    if (power_mode) {
      cells.emplace_back(std::pow(std::log(N), log_power), N);
    }
  }
  if (!power_mode) {
    for (double n : grid.n_values) {
      for (double N : grid.N_values) cells.emplace_back(n, N);
    }
  }
  std::vector<double> ns;
  for (const auto& c : cells) ns.push_back(c.first);

  const double delta = grid.option("delta", 0.0);
  const double a_bar = grid.option("a_bar", 0.0);
  const double prop_c = grid.option("logsq_c", 2.0);
  harness_detail::CountContext ctx(ns, grid.N_values, grid.guard());
  CommandResult result{Table(kBoundScanColumns), 0};

  for (const auto& [n, N] : cells) {
    nlohmann::ordered_json row;
    std::string notes;
    row["n"] = n;
    row["N"] = N;
    try {
      if (!(n > 2.0)) throw DomainError("n must exceed 2");
      if (!(N >= 2.0)) throw DomainError("N must be at least 2");
      const auto nu = ctx.nu(n, N);
      if (!nu) throw ResourceLimit("N beyond the direct-count guard");
      const double ln_n = std::log(n);
      const double ln_N = std::log(N);
      const double ratio = std::log(static_cast<double>(*nu)) / ln_N;
      row["nu"] = std::to_string(*nu);
      row["log_ratio"] = ratio;
      try_cell(row, notes, "q", [&] { return ln_n / std::log(ln_N); });
      try_cell(row, notes, "lower_rhs", [&] { return lower_bound_rhs(n, N, a_star(), delta); });
      try_cell(row, notes, "upper_rhs",
               [&] { return upper_bound_rhs(n, N, a_bar, false).value; });
      try_cell(row, notes, "upper_tail_rhs",
               [&] { return upper_bound_rhs(n, N, a_bar, true).value; });
      if (!row["lower_rhs"].is_null()) row["lower_margin"] = ratio - row["lower_rhs"].get<double>();
      if (!row["upper_rhs"].is_null()) row["upper_margin"] = row["upper_rhs"].get<double>() - ratio;
      if (!row["upper_tail_rhs"].is_null()) {
        row["upper_tail_margin"] = row["upper_tail_rhs"].get<double>() - ratio;
        row["sqrt_condition"] = to_string(upper_bound_rhs(n, N, a_bar, true).sqrt_condition);
      }
      if (!row["q"].is_null()) {
        const double q = row["q"].get<double>();
        row["trend_exponent"] = q > 0.0 ? 1.0 - 1.0 / q : NAN;
      }
      try_cell(row, notes, "ladder4_lower_rhs",
               [&] { return ladder_lower_rhs(n, N, 4, a_star(), delta); });
      try_cell(row, notes, "ladder4_upper_rhs", [&] { return ladder_upper_rhs(n, N, 4, a_bar); });
      const double alpha = n / (ln_N * ln_N);
      row["logsq_alpha"] = alpha;
      if (ln_N > 1.0) {
        row["logsq_c_needed"] = (ratio - 1.0 + std::log(ln_N) / ln_n) * ln_n;
      }
      try_cell(row, notes, "log_square_rhs", [&] { return log_square_rhs(N, alpha, prop_c).rhs; });
      row["status"] = "ok";
    } catch (const ResourceLimit& e) {
      row["status"] = "skipped";
      notes = e.what();
    } catch (const std::exception& e) {
      row["status"] = "error";
      notes = e.what();
    }
    if (!notes.empty()) row["note"] = notes;
    result.table.add(std::move(row));
  }
  return result;
}

}  // namespace smoothbound

#include <cmath>

#include "common.hpp"
#include "smoothbound/binning.hpp"
#include "smoothbound/harness.hpp"

namespace smoothbound {

using harness_detail::log_or_neg_inf;

const std::vector<std::string> kSandwichColumns = {
    "n",        "N",           "r",         "case",         "m",      "nu_lower",
    "nu_lower_log", "nu",      "nu_upper",  "margin_lower", "margin_upper",
    "product_bound", "status", "note"};

CommandResult run_sandwich(const ExperimentGrid& grid) {
  grid.validate(true, false);
  const std::uint64_t guard = grid.guard();
  harness_detail::CountContext ctx(grid.n_values, grid.N_values, guard);
  CommandResult result{Table(kSandwichColumns), 0};

  for (double n : grid.n_values) {
    for (double N : grid.N_values) {
      nlohmann::ordered_json row;
      row["n"] = n;
      row["N"] = N;
      try {
        const BinningSpec spec = build_binning(n, ctx.table());
        row["r"] = spec.r;
        row["case"] = spec.case_tag == BinCase::r1 ? "r1" : "r2";
        row["m"] = ctx.table().count_below(n);
        const auto nu = ctx.nu(n, N);
        if (!nu) throw ResourceLimit("N beyond the direct-count guard");
        const LowerUnderlineResult lower = nu_lower_underline(n, N, spec, guard);
        const UpperBarResult upper = nu_upper_bar(n, N, spec, guard);
        const double nu_d = static_cast<double>(*nu);

        const bool lower_ok = std::isfinite(lower.value) ? lower.value <= nu_d
                                                         : lower.log_value <= log_or_neg_inf(nu_d);
        const bool upper_ok = BigInt(*nu) <= upper.value;
        row["nu_lower"] = lower.value;
        row["nu_lower_log"] = lower.log_value;
        row["nu"] = std::to_string(*nu);
        row["nu_upper"] = to_decimal(upper.value);
        row["margin_lower"] = log_or_neg_inf(nu_d) - lower.log_value;
        row["margin_upper"] = log_of(upper.value) - log_or_neg_inf(nu_d);
        row["product_bound"] = lower.product_bound_held;
        const bool ok = lower_ok && upper_ok && lower.product_bound_held;
        row["status"] = ok ? "ok" : "violation";
        if (!ok) {
          result.exit_code = 1;
          row["note"] = !lower_ok ? "nu_lower > nu" : !upper_ok ? "nu > nu_upper" : "product bound failed";
        }
      } catch (const ResourceLimit& e) {
        row["status"] = "skipped";
        row["note"] = e.what();
      } catch (const std::exception& e) {
        row["status"] = "error";
        row["note"] = e.what();
      }
      result.table.add(std::move(row));
    }
  }
  return result;
}

}  // namespace smoothbound

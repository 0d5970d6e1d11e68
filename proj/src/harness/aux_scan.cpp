#include <cmath>
#include <numbers>

#include "smoothbound/auxproblems.hpp"
#include "smoothbound/bounds.hpp"
#include "smoothbound/errors.hpp"
#include "smoothbound/harness.hpp"

namespace smoothbound {

const std::vector<std::string> kAuxScanColumns = {
    "record",          "c",           "M",           "ln_F",          "F_terms",
    "ln_G",            "G_terms",     "ln_2cF",      "gap",           "premise_c",
    "premise_M",       "premise_ratio", "premise_z", "kappa",         "gamma",
    "seed",            "seed_property", "origin_c",  "origin_M",      "step",
    "t",               "in_domain",   "contraction_held", "lhs",      "rhs",
    "inequality_held", "f_bound_held", "premise_M_gt_Kc", "status",   "note"};

namespace {

void aux_row(Table& table, double c, double M, std::uint64_t guard) {
  nlohmann::ordered_json row;
  row["record"] = "aux";
  row["c"] = c;
  row["M"] = M;
  std::string notes;
  bool failed = false;
  std::optional<AuxSum> F;
  std::optional<AuxSum> G;
  try {
    F = eval_F(make_aux_instance(c, M, AuxKind::P), guard);
    row["ln_F"] = F->log_value;
    row["F_terms"] = F->terms;
  } catch (const std::exception& e) {
    failed = true;
    notes += std::string("F: ") + e.what();
  }
  try {
    G = eval_G(make_aux_instance(c, M, AuxKind::Q), guard);
    row["ln_G"] = G->log_value;
    row["G_terms"] = G->terms;
    row["premise_ratio"] = G->max_premise_ratio;
    row["premise_z"] = G->max_premise_ratio < std::numbers::ln2;
  } catch (const std::exception& e) {
    failed = true;
    if (!notes.empty()) notes += "; ";
    notes += std::string("G: ") + e.what();
  }
  row["premise_c"] = c > std::numbers::e / std::numbers::ln2 && c != std::floor(c);
  row["premise_M"] = M <= std::exp(c / 2.0);
  if (F) row["ln_2cF"] = F->log_value + c * std::numbers::ln2;
  if (F && G) row["gap"] = F->log_value + c * std::numbers::ln2 - G->log_value;
  row["status"] = failed ? "error" : "ok";
  if (!notes.empty()) row["note"] = notes;
  table.add(std::move(row));
}

void seed_rows(Table& table) {
  for (double kappa : {0.0, 1.0, 2.0}) {
    for (double gamma : {0.0, 1.0, 2.0}) {
      nlohmann::ordered_json row;
      row["record"] = "seed";
      row["kappa"] = kappa;
      row["gamma"] = gamma;
      const double b = seed_coefficient(kappa, gamma);
      row["seed"] = b;
      if (kappa > 0.0) row["seed_property"] = b * std::exp(std::exp(kappa + gamma) / (kappa + 1.0)) < 1.0;
      row["status"] = "ok";
      table.add(std::move(row));
    }
  }
}

void trace_rows(Table& table, double c, double M, double alpha, double beta) {
  if (!(c > 2.0) || !(M > std::numbers::e)) return;
  const IterationTrace trace = iterate_lower_trace(c, M, alpha, beta, 200);
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const TraceStep& s = trace.steps[i];
    nlohmann::ordered_json row;
    row["record"] = "trace";
    row["c"] = s.c;
    row["M"] = s.M;
    row["gamma"] = s.gamma;
    row["origin_c"] = c;
    row["origin_M"] = M;
    row["step"] = i;
    row["t"] = s.t;
    row["in_domain"] = s.in_domain;
    row["contraction_held"] = s.contraction_held;
    row["status"] = "ok";
    if (i + 1 == trace.steps.size()) row["note"] = "stop: " + trace.stop_reason;
    table.add(std::move(row));
  }
}

void upper_step_row(Table& table, double c, double M, double a_bar, double q) {
  if (!(c - 1.0 > std::numbers::e) || !(M > std::numbers::e)) return;
  nlohmann::ordered_json row;
  row["record"] = "upper-step";
  row["c"] = c;
  row["M"] = M;
  try {
    const UpperStepCheck u = upper_step_check(c, M, a_bar, q, default_upper_step_K());
    row["gamma"] = u.gamma0;
    row["t"] = u.t0;
    row["lhs"] = u.lhs;
    row["rhs"] = u.rhs;
    row["inequality_held"] = u.inequality_held;
    row["f_bound_held"] = u.f_bound_held;
    row["premise_M_gt_Kc"] = u.premise_M_gt_Kc;
    row["status"] = "ok";
  } catch (const std::exception& e) {
    row["status"] = "error";
    row["note"] = e.what();
  }
  table.add(std::move(row));
}

}  // namespace

CommandResult run_aux_scan(const ExperimentGrid& grid) {
  grid.validate(false, true);
  const std::uint64_t guard = grid.guard();
  const double alpha = grid.option("alpha", 0.1);
  const double beta = grid.option("beta", 0.4);
  const double a_bar = grid.option("a_bar", a_star());
  const double q = grid.option("q", 1.1);
  CommandResult result{Table(kAuxScanColumns), 0};
  for (double c : grid.c_values) {
    for (double M : grid.M_values) aux_row(result.table, c, M, guard);
  }
  seed_rows(result.table);
  for (double c : grid.c_values) {
    for (double M : grid.M_values) trace_rows(result.table, c, M, alpha, beta);
  }
  for (double c : grid.c_values) {
    for (double M : grid.M_values) upper_step_row(result.table, c, M, a_bar, q);
  }
  return result;
}

}  // namespace smoothbound

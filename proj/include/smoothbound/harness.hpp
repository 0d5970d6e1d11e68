#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace smoothbound {

enum class OutputFormat { csv, json };

// Grid axes plus named numeric options (guard, delta, alpha, a_bar, seed, ...).
struct ExperimentGrid {
  std::vector<double> n_values;
  std::vector<double> N_values;
  std::vector<double> c_values;
  std::vector<double> M_values;
  std::map<std::string, double> options;

  // Throws InvalidArgument if an axis the command uses is empty or a guard
  // is not positive.
  void validate(bool needs_nN, bool needs_cM) const;
  double option(const std::string& name, double fallback) const;
  std::uint64_t guard() const;

  // Keys: n_values, N_values, c_values, M_values, options. Missing keys keep
  // the current values.
  void merge_json(const nlohmann::json& config);
};

ExperimentGrid default_sandwich_grid();
ExperimentGrid default_bound_scan_grid();
ExperimentGrid default_aux_scan_grid();

// SMOOTHBOUND_GUARD, if set and a positive integer.
std::optional<std::uint64_t> guard_from_environment();

// Rows in a fixed column order. Cells are strings, numbers, booleans or null.
class Table {
 public:
  explicit Table(std::vector<std::string> columns);
  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<nlohmann::ordered_json>& rows() const { return rows_; }
  // Unknown keys are rejected; missing keys become null.
  void add(nlohmann::ordered_json row);
  void write(std::ostream& out, OutputFormat format) const;

 private:
  std::vector<std::string> columns_;
  std::vector<nlohmann::ordered_json> rows_;
};

// Shortest round-trip decimal, '.' separator, no grouping.
std::string format_number(double x);

struct CommandResult {
  Table table;
  int exit_code = 0;
};

extern const std::vector<std::string> kSandwichColumns;
extern const std::vector<std::string> kBoundScanColumns;
extern const std::vector<std::string> kAuxScanColumns;

// One row per (n, N): nu_lower <= nu <= nu_upper. Exit 1 iff a cell violates
// the sandwich or the per-bin product bound. Guard overruns are "skipped".
CommandResult run_sandwich(const ExperimentGrid& grid);

// Exact ln nu / ln N against the closed-form right-hand sides. Report only;
// the exit code is always 0.
CommandResult run_bound_scan(const ExperimentGrid& grid);

// ln F, ln G and the c ln 2 gap per (c, M); seed coefficients; lower
// iteration traces; upper-step checks. Report only.
CommandResult run_aux_scan(const ExperimentGrid& grid);

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::uint64_t guard = 100'000'000ULL;
  bool verbose = false;
};

struct CheckOutcome {
  std::string name;
  std::string formula;  // what the check exercises
  bool asserted = true;
  std::string status;   // pass | fail | skipped | reported
  std::string detail;
};

struct VerifyResult {
  std::vector<CheckOutcome> checks;
  int exit_code = 0;
};

// Every asserted invariant at desk scale. Exit 1 iff an asserted check fails.
VerifyResult run_verify(const VerifyOptions& options);
void print_verify(const VerifyResult& result, std::ostream& out);

}  // namespace smoothbound

// Command-line front end: grid experiments and the verification suite.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "smoothbound/errors.hpp"
#include "smoothbound/harness.hpp"

namespace sb = smoothbound;

namespace {

std::string join(const std::vector<std::string>& cols) {
  std::string out;
  for (const auto& c : cols) out += (out.empty() ? "" : ",") + c;
  return out;
}

// Values given on the command line; unset ones leave the grid alone.
struct GridFlags {
  std::string config;
  std::vector<double> n_values, N_values, c_values, M_values;
  std::optional<std::uint64_t> guard;
  std::optional<double> delta, alpha, a_bar, log_power;
  std::string format = "csv";
  std::string out;

  void attach(CLI::App* app, bool nN, bool cM) {
    app->add_option("--config", config, "JSON file with n_values, N_values, c_values, M_values, options")
        ->check(CLI::ExistingFile);
    if (nN) {
      app->add_option("--n-values", n_values, "smoothness bounds n")->delimiter(',');
      app->add_option("--big-n-values", N_values, "upper limits N")->delimiter(',');
    }
    if (cM) {
      app->add_option("--c-values", c_values, "auxiliary-problem c values")->delimiter(',');
      app->add_option("--m-values", M_values, "auxiliary-problem M values")->delimiter(',');
    }
    app->add_option("--guard", guard, "enumeration guard (overrides SMOOTHBOUND_GUARD)");
    app->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app->add_option("--out", out, "output file (default stdout)");
  }

  sb::ExperimentGrid resolve(sb::ExperimentGrid grid) const {
    if (!config.empty()) {
      std::ifstream in(config);
      grid.merge_json(nlohmann::json::parse(in));
    }
    if (auto env = sb::guard_from_environment()) grid.options["guard"] = static_cast<double>(*env);
    if (!n_values.empty()) grid.n_values = n_values;
    if (!N_values.empty()) grid.N_values = N_values;
    if (!c_values.empty()) grid.c_values = c_values;
    if (!M_values.empty()) grid.M_values = M_values;
    if (guard) grid.options["guard"] = static_cast<double>(*guard);
    if (delta) grid.options["delta"] = *delta;
    if (alpha) grid.options["alpha"] = *alpha;
    if (a_bar) grid.options["a_bar"] = *a_bar;
    if (log_power) grid.options["log_power"] = *log_power;
    return grid;
  }
};

int emit(const sb::CommandResult& result, const GridFlags& flags) {
  const auto fmt = flags.format == "json" ? sb::OutputFormat::json : sb::OutputFormat::csv;
  if (flags.out.empty()) {
    result.table.write(std::cout, fmt);
  } else {
    std::ofstream file(flags.out, std::ios::binary);
    if (!file) throw sb::InvalidArgument("cannot open " + flags.out);
    result.table.write(file, fmt);
  }
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact smooth-number counts and the bound constructions around them"};
  app.require_subcommand(1);
  app.footer(
      "Exit status: 0 unless an asserted invariant fails (1) or the input is invalid (2).\n"
      "SMOOTHBOUND_GUARD sets the enumeration guard; --guard wins over it, and both win over --config.");

  GridFlags sandwich_flags, scan_flags, aux_flags;

  auto* sandwich = app.add_subcommand("sandwich", "nu_lower <= nu <= nu_upper per (n, N)");
  sandwich_flags.attach(sandwich, true, false);
  sandwich->footer("CSV columns: " + join(sb::kSandwichColumns) +
                   "\nmargin_lower = ln nu - ln nu_lower, margin_upper = ln nu_upper - ln nu."
                   "\nstatus: ok | violation | skipped (guard) | error.");

  auto* scan = app.add_subcommand("bound-scan", "ln nu / ln N against the closed-form right-hand sides");
  scan_flags.attach(scan, true, false);
  scan->add_option("--delta", scan_flags.delta, "delta in the lower right-hand side (default 0)");
  scan->add_option("--a-bar", scan_flags.a_bar, "a_bar in the upper right-hand side (default 0)");
  scan->add_option("--log-power", scan_flags.log_power, "use n = (ln N)^q per N instead of --n-values");
  scan->footer("CSV columns: " + join(sb::kBoundScanColumns) +
               "\nMargins are positive when the bound sits on its claimed side. Report only.");

  auto* aux = app.add_subcommand("aux-scan", "F, G, seed coefficients, iteration traces");
  aux_flags.attach(aux, false, true);
  aux->add_option("--alpha", aux_flags.alpha, "alpha of the lower iteration (default 0.1)");
  aux->add_option("--a-bar", aux_flags.a_bar, "a_bar of the upper step (default a*)");
  aux->footer("CSV columns: " + join(sb::kAuxScanColumns) +
              "\nrecord: aux | seed | trace | upper-step; unused columns are empty. gap = ln(2^c F) - ln G."
              " Report only.");

  sb::VerifyOptions verify_opts;
  std::optional<std::uint64_t> verify_guard;
  auto* verify = app.add_subcommand("verify", "run every asserted invariant and print a coverage table");
  verify->add_option("--seed", verify_opts.seed, "seed for the sampled checks");
  verify->add_option("--guard", verify_guard, "enumeration guard");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sandwich) return emit(sb::run_sandwich(sandwich_flags.resolve(sb::default_sandwich_grid())), sandwich_flags);
    if (*scan) return emit(sb::run_bound_scan(scan_flags.resolve(sb::default_bound_scan_grid())), scan_flags);
    if (*aux) return emit(sb::run_aux_scan(aux_flags.resolve(sb::default_aux_scan_grid())), aux_flags);
    if (*verify) {
      if (auto env = sb::guard_from_environment()) verify_opts.guard = *env;
      if (verify_guard) verify_opts.guard = *verify_guard;
      const sb::VerifyResult r = sb::run_verify(verify_opts);
      sb::print_verify(r, std::cout);
      return r.exit_code;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

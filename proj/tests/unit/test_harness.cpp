#include <cstdlib>
#include <sstream>

#include "doctest.h"
#include "smoothbound/errors.hpp"
#include "smoothbound/harness.hpp"

using namespace smoothbound;

namespace {
std::string csv(const CommandResult& r) {
  std::ostringstream os;
  r.table.write(os, OutputFormat::csv);
  return os.str();
}
std::size_t count_records(const CommandResult& r, const std::string& record) {
  std::size_t n = 0;
  for (const auto& row : r.table.rows()) n += row.at("record") == record;
  return n;
}
}  // namespace

TEST_CASE("grid validation and config merge") {
  ExperimentGrid g = default_sandwich_grid();
  CHECK_NOTHROW(g.validate(true, false));
  CHECK_THROWS_AS(g.validate(true, true), InvalidArgument);
  g.options["guard"] = 0;
  CHECK_THROWS_AS(g.validate(true, false), InvalidArgument);

  ExperimentGrid h;
  h.merge_json(nlohmann::json::parse(R"({"n_values": [10, 20], "N_values": [1000], "options": {"guard": 5}})"));
  CHECK(h.n_values.size() == 2);
  CHECK(h.guard() == 5);
  CHECK(h.c_values.empty());
  CHECK_THROWS_AS(h.merge_json(nlohmann::json::parse(R"({"n_values": "x"})")), InvalidArgument);
  CHECK_THROWS_AS(h.merge_json(nlohmann::json::parse(R"([1, 2])")), InvalidArgument);
  CHECK_THROWS_AS(h.merge_json(nlohmann::json::parse(R"({"options": {"guard": "big"}})")), InvalidArgument);
}

TEST_CASE("environment guard") {
  ::setenv("SMOOTHBOUND_GUARD", "1234", 1);
  CHECK(guard_from_environment() == 1234u);
  ::setenv("SMOOTHBOUND_GUARD", "12x", 1);
  CHECK_THROWS_AS(guard_from_environment(), InvalidArgument);
  ::unsetenv("SMOOTHBOUND_GUARD");
  CHECK_FALSE(guard_from_environment().has_value());
}

TEST_CASE("table output") {
  Table t({"a", "b", "c"});
  t.add({{"a", 1.5}, {"b", "x,y"}});
  t.add({{"c", true}, {"a", 100000.0}});
  CHECK_THROWS_AS(t.add({{"z", 1}}), InvalidArgument);
  std::ostringstream os;
  t.write(os, OutputFormat::csv);
  CHECK(os.str() == "a,b,c\n1.5,\"x,y\",\n100000,,true\n");
  std::ostringstream js;
  t.write(js, OutputFormat::json);
  const auto parsed = nlohmann::json::parse(js.str());
  REQUIRE(parsed.size() == 2);
  CHECK(parsed[0]["b"] == "x,y");
  CHECK(parsed[1]["b"].is_null());
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(1e20) == "1e+20");
  CHECK(format_number(-INFINITY) == "-inf");
}

TEST_CASE("sandwich command") {
  ExperimentGrid g;
  g.n_values = {10, 20};
  g.N_values = {1e3, 1e4};
  const CommandResult r = run_sandwich(g);
  CHECK(r.exit_code == 0);
  REQUIRE(r.table.rows().size() == 4);
  for (const auto& row : r.table.rows()) CHECK(row.at("status") == "ok");

  g.n_values = {10};
  g.N_values = {100, 2.5};
  const CommandResult small = run_sandwich(g);
  CHECK(small.table.rows()[0].at("nu") == "45");
  CHECK(small.table.rows()[1].at("nu") == "1");
  CHECK(small.table.rows()[1].at("status") == "ok");

  g.options["guard"] = 50;
  g.N_values = {1e4};
  const CommandResult skipped = run_sandwich(g);
  CHECK(skipped.exit_code == 0);
  CHECK(skipped.table.rows()[0].at("status") == "skipped");

  g = ExperimentGrid{};
  g.n_values = {2};
  g.N_values = {100};
  const CommandResult bad = run_sandwich(g);
  CHECK(bad.exit_code == 0);
  CHECK(bad.table.rows()[0].at("status") == "error");
}

TEST_CASE("bound scan command") {
  ExperimentGrid g;
  g.n_values = {100, 2};
  g.N_values = {1e6};
  const CommandResult r = run_bound_scan(g);
  CHECK(r.exit_code == 0);
  REQUIRE(r.table.rows().size() == 2);
  const auto& full = r.table.rows()[0];
  CHECK(full.at("status") == "ok");
  CHECK(full.at("nu") == "72270");
  for (const char* col : {"log_ratio", "lower_rhs", "upper_rhs", "upper_tail_rhs", "trend_exponent", "logsq_c_needed"}) {
    CHECK(full.at(col).is_number());
  }
  CHECK(r.table.rows()[1].at("status") == "error");

  ExperimentGrid p;
  p.N_values = {1e4, 1e5, 1e6};
  p.options["log_power"] = 2;
  const CommandResult power = run_bound_scan(p);
  REQUIRE(power.table.rows().size() == 3);
  for (const auto& row : power.table.rows()) CHECK(row.at("trend_exponent").get<double>() == doctest::Approx(0.5));
}

TEST_CASE("aux scan command") {
  ExperimentGrid g;
  g.c_values = {4.5, 8.0};
  g.M_values = {2, 5, 10};
  const CommandResult r = run_aux_scan(g);
  CHECK(r.exit_code == 0);
  CHECK(count_records(r, "aux") == 6);
  CHECK(count_records(r, "seed") == 9);
  CHECK(count_records(r, "trace") > 0);
  std::size_t errors = 0;
  for (const auto& row : r.table.rows()) {
    if (row.at("record") == "aux" && row.at("c") == 8.0) {
      CHECK(row.at("status") == "error");
      CHECK(row.at("ln_F").is_number());
      ++errors;
    }
  }
  CHECK(errors == 3);
}

TEST_CASE("outputs are deterministic") {
  CHECK(csv(run_sandwich(default_sandwich_grid())) == csv(run_sandwich(default_sandwich_grid())));
  CHECK(csv(run_aux_scan(default_aux_scan_grid())) == csv(run_aux_scan(default_aux_scan_grid())));
}

TEST_CASE("verify suite") {
  VerifyOptions o;
  o.seed = 7;
  const VerifyResult a = run_verify(o);
  const VerifyResult b = run_verify(o);
  CHECK(a.exit_code == 0);
  REQUIRE(a.checks.size() == b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].status == b.checks[i].status);
    CHECK(a.checks[i].detail == b.checks[i].detail);
  }
  std::ostringstream os;
  print_verify(a, os);
  CHECK(os.str().find("coverage") != std::string::npos);

  o.guard = 20;
  const VerifyResult tight = run_verify(o);
  CHECK(tight.exit_code == 0);
  std::size_t skipped = 0;
  for (const auto& c : tight.checks) skipped += c.status == "skipped";
  CHECK(skipped > 0);
}

#include <doctest.h>

#include <json.hpp>

#include "arad/error.hpp"
#include "arad/suite.hpp"

using namespace arad;
using nlohmann::json;

namespace {

SuiteConfig small_config() {
  SuiteConfig c;
  c.dims = {2, 3};
  c.trials = 3;
  c.seed = 7;
  return c;
}

ErrorCode config_code(std::string_view text) {
  try {
    parse_suite_config(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a config failure for " << text);
  return ErrorCode::PostconditionFailed;
}

}  // namespace

TEST_CASE("zero trials give an empty passing report") {
  SuiteConfig c;
  c.trials = 0;
  const SuiteReport r = run_suite(c);
  CHECK(r.passed());
  CHECK(r.checks.empty());
  CHECK(r.total_trials == 0);
  const json j = json::parse(report_to_json(r));
  CHECK(j["summary"]["passed"] == true);
  CHECK(j["checks"].empty());
}

TEST_CASE("small suite passes and aggregates consistently") {
  const SuiteReport r = run_suite(small_config());
  CHECK(r.passed());
  CHECK(r.units == 6);
  std::size_t trials = 0;
  for (const CheckAggregate& a : r.checks) {
    INFO(a.name);
    CHECK(a.failures == 0);
    CHECK(a.errors == 0);
    CHECK(a.failing.empty());
    std::size_t counted = 0;
    for (std::size_t n : a.histogram) counted += n;
    CHECK(counted == a.trials);
    CHECK(a.histogram.front() >= a.failures);
    trials += a.trials;
  }
  CHECK(trials == r.total_trials);
}

TEST_CASE("reports do not depend on the worker count") {
  SuiteConfig serial = small_config(), parallel = small_config();
  serial.workers = 1;
  parallel.workers = 4;
  const SuiteReport a = run_suite(serial), b = run_suite(parallel);
  CHECK(a.workers_used == 1);
  CHECK(report_to_json(a, false) == report_to_json(b, false));

  SuiteConfig other = small_config();
  other.seed = 8;
  CHECK(report_to_json(run_suite(other), false) != report_to_json(a, false));
}

TEST_CASE("report schema") {
  SuiteConfig c = small_config();
  c.dims = {2};
  const json j = json::parse(report_to_json(run_suite(c)));
  for (const char* k : {"passed", "units", "checks", "trials", "failures",
                        "worst_relative_width", "unconverged_enclosures"})
    CHECK(j["summary"].contains(k));
  CHECK(j.contains("config"));
  CHECK(j.contains("timing"));
  CHECK_FALSE(json::parse(report_to_json(run_suite(c), false)).contains("timing"));
  REQUIRE_FALSE(j["checks"].empty());
  for (const json& a : j["checks"]) {
    for (const char* k : {"name", "trials", "failures", "vacuous", "errors", "min_slack", "worst",
                          "failing", "tightness_histogram"})
      CHECK(a.contains(k));
    for (const char* k : {"name", "lhs", "rhs", "slack", "tol_used", "pass", "vacuous", "inputs"})
      CHECK(a["worst"].contains(k));
    CHECK(a["tightness_histogram"]["counts"].size() ==
          a["tightness_histogram"]["edges"].size() + 1);
  }
}

TEST_CASE("fault injection surfaces a negative slack") {
  SuiteConfig c = small_config();
  c.inject = FaultInjection{"offdiag_upper", 1e6};
  const SuiteReport r = run_suite(c);
  CHECK_FALSE(r.passed());
  for (const CheckAggregate& a : r.checks) {
    if (a.name != "offdiag_upper") {
      CHECK(a.failures == 0);
      continue;
    }
    CHECK(a.failures == a.trials);
    CHECK(a.min_slack < 0.0);
    REQUIRE_FALSE(a.failing.empty());
    CHECK(a.failing.front().slack < -a.failing.front().tol_used);
  }
}

TEST_CASE("config parsing and validation") {
  const SuiteConfig c = parse_suite_config(
      R"({"dims": [2, 5], "trials": 11, "rank_profile": "deficient", "seed": 3,
          "tolerances": {"inequality": 1e-6}, "radius": {"rel_width": 1e-7},
          "inject_failure": {"check": "pm_norm", "rhs_offset": 0.5}})");
  CHECK(c.dims == std::vector<std::size_t>{2, 5});
  CHECK(c.trials == 11);
  CHECK(c.rank_profile == RankProfile::deficient);
  CHECK(c.seed == 3);
  CHECK(c.tol.inequality == 1e-6);
  CHECK(c.tol.identity == CheckTolerances{}.identity);
  CHECK(c.radius.rel_width == 1e-7);
  REQUIRE(c.inject);
  CHECK(c.inject->check == "pm_norm");
  CHECK(c.inject->rhs_offset == 0.5);

  const SuiteConfig d = parse_suite_config("{}");
  CHECK(d.dims == SuiteConfig{}.dims);
  CHECK(d.trials == 500);
  CHECK(d.rank_profile == RankProfile::mixed);

  CHECK(config_code("[]") == ErrorCode::ConfigInvalid);
  CHECK(config_code("{") == ErrorCode::ConfigInvalid);
  CHECK(config_code(R"({"dims": [0]})") == ErrorCode::ConfigInvalid);
  CHECK(config_code(R"({"dims": []})") == ErrorCode::ConfigInvalid);
  CHECK(config_code(R"({"trials": -1})") == ErrorCode::ConfigInvalid);
  CHECK(config_code(R"({"rank_profile": "odd"})") == ErrorCode::ConfigInvalid);
  CHECK(config_code(R"({"radius": {"rel_width": 0}})") == ErrorCode::ConfigInvalid);
  CHECK(to_string(parse_rank_profile("mixed")) == "mixed");
}

TEST_CASE("mixed rank profile includes rank-deficient metrics") {
  SuiteConfig c = small_config();
  c.dims = {4};
  c.trials = 20;
  std::size_t deficient = 0, total = 0;
  for (std::size_t t = 0; t < c.trials; ++t)
    for (const CheckResult& r : run_unit(c, 4, t).results)
      if (r.name == "offdiag_upper") {
        ++total;
        if (r.inputs.rank < r.inputs.dim) ++deficient;
      }
  CHECK(total == c.trials);
  CHECK(deficient * 10 >= total * 3);
}

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arad/checks.hpp"

namespace arad {

enum class RankProfile { full, deficient, mixed };

std::string_view to_string(RankProfile p);
/// Throws ConfigInvalid.
RankProfile parse_rank_profile(std::string_view name);

/// Self-test hook: subtract rhs_offset from the rhs of every result named
/// `check`, so the harness can be shown to surface a violation.
struct FaultInjection {
  std::string check;
  double rhs_offset = 1.0;
};

struct SuiteConfig {
  std::vector<std::size_t> dims{2, 3, 4, 6};
  std::size_t trials = 500;
  RankProfile rank_profile = RankProfile::mixed;
  std::uint64_t seed = 20240611;
  CheckTolerances tol;
  RadiusConfig radius = default_radius();
  /// 0 picks the hardware concurrency, capped by ARAD_MAX_WORKERS.
  std::size_t workers = 0;
  std::optional<FaultInjection> inject;
  /// Failing results kept verbatim per check.
  std::size_t max_failures_kept = 20;

  static RadiusConfig default_radius();
  /// Throws ConfigInvalid.
  void validate() const;
};

struct CheckAggregate {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::size_t vacuous = 0;
  std::size_t errors = 0;
  double min_slack = 0.0;
  /// Result closest to failing (smallest slack + tol_used).
  CheckResult worst;
  std::vector<CheckResult> failing;
  /// Counts of slack / max(1, |lhs|, |rhs|) per bin of tightness_edges().
  std::vector<std::size_t> histogram;
};

/// Upper bin edges; the first bin holds negative slack, the last is open.
const std::vector<double>& tightness_edges();

struct SuiteReport {
  SuiteConfig config;
  std::vector<CheckAggregate> checks;
  std::size_t total_trials = 0;
  std::size_t total_failures = 0;
  std::size_t units = 0;
  double worst_relative_width = 0.0;
  std::size_t unconverged_enclosures = 0;
  double wall_seconds = 0.0;
  std::size_t workers_used = 0;

  bool passed() const { return total_failures == 0; }
};

/// Every check and property on the instance generated for (dim, trial).
struct UnitOutcome {
  std::vector<CheckResult> results;
  double worst_relative_width = 0.0;
  std::size_t unconverged = 0;
};

UnitOutcome run_unit(const SuiteConfig& cfg, std::size_t dim, std::size_t trial);

/// Runs all units (in parallel when allowed) and aggregates them in unit order,
/// so the report does not depend on the worker count.
SuiteReport run_suite(const SuiteConfig& cfg);

/// JSON document; timing fields are omitted when include_timing is false.
std::string report_to_json(const SuiteReport& report, bool include_timing = true);

/// Reads a JSON config object; absent keys keep their defaults.
/// Throws ConfigInvalid.
SuiteConfig parse_suite_config(std::string_view json_text);

}  // namespace arad

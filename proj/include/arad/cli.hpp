#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "arad/radius.hpp"

namespace arad {

/// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct ComputeOptions {
  std::string metric_file;
  std::string operator_file;
  /// Any of: seminorm, sharp, w, sampled, r, classify, reduced, membership.
  /// Empty means all but "sampled".
  std::vector<std::string> quantities;
  std::string out;  ///< empty: stdout
  RadiusConfig radius;
};

struct CheckOptions {
  std::optional<std::string> config_file;
  std::optional<std::vector<std::size_t>> dims;
  std::optional<std::size_t> trials;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> rank_profile;
  std::optional<std::size_t> workers;
  std::optional<std::string> inject_check;
  double inject_offset = 1.0;
  std::string out;  ///< empty: stdout
};

struct GenerateOptions {
  /// psd (metric only) or an operator kind: arbitrary, in_LA, A_selfadjoint,
  /// A_positive, nilpotent_AT2zero, A_unitary.
  std::string kind;
  std::size_t dim = 0;
  std::optional<std::size_t> rank;
  std::uint64_t seed = 0;
  /// Writes <prefix>.metric.json and, for operator kinds, <prefix>.operator.json.
  std::string out_prefix;
};

int cmd_compute(const ComputeOptions& opt, std::ostream& out, std::ostream& err);
int cmd_check(const CheckOptions& opt, std::ostream& out, std::ostream& err);
int cmd_generate(const GenerateOptions& opt, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to a command.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace arad

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace arad {

enum class ErrorCode {
  NotSquare,
  NotHermitian,
  NotPsd,
  NoConvergence,
  DimensionMismatch,
  NegativeEntry,
  NonFinite,
  NotABounded,
  NotInLA,
  UnsatisfiableKind,
  BadRank,
  DegenerateFrame,
  ConfigInvalid,
  ParseError,
  PostconditionFailed,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Exception carrying a machine-readable code. Every failure raised by the
/// library is one of these.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace arad

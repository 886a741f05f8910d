#include "arad/error.hpp"

namespace arad {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotPsd: return "NotPsd";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NegativeEntry: return "NegativeEntry";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::NotABounded: return "NotABounded";
    case ErrorCode::NotInLA: return "NotInLA";
    case ErrorCode::UnsatisfiableKind: return "UnsatisfiableKind";
    case ErrorCode::BadRank: return "BadRank";
    case ErrorCode::DegenerateFrame: return "DegenerateFrame";
    case ErrorCode::ConfigInvalid: return "ConfigInvalid";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::PostconditionFailed: return "PostconditionFailed";
  }
  return "Unknown";
}

}  // namespace arad

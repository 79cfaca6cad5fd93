#include "fermat/error.hpp"

namespace fermat {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotPrime: return "NOT_PRIME";
    case ErrorCode::kTooSmall: return "TOO_SMALL";
    case ErrorCode::kTooLarge: return "TOO_LARGE";
    case ErrorCode::kOutOfRange: return "OUT_OF_RANGE";
    case ErrorCode::kDegenerate: return "DEGENERATE";
    case ErrorCode::kFlavorMismatch: return "FLAVOR_MISMATCH";
    case ErrorCode::kNoGamma: return "NO_GAMMA";
    case ErrorCode::kInconsistentRh: return "INCONSISTENT_RH";
    case ErrorCode::kNotSubgroupOfH: return "NOT_SUBGROUP_OF_H";
    case ErrorCode::kSearchExhausted: return "SEARCH_EXHAUSTED";
    case ErrorCode::kInconsistentOrbifold: return "INCONSISTENT_ORBIFOLD";
    case ErrorCode::kIdentityInput: return "IDENTITY_INPUT";
    case ErrorCode::kNonMonomial: return "NON_MONOMIAL";
    case ErrorCode::kAuditFail: return "AUDIT_FAIL";
    case ErrorCode::kShapeMismatch: return "SHAPE_MISMATCH";
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace fermat

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fermat {

enum class ErrorCode {
  kNotPrime,
  kTooSmall,
  kTooLarge,
  kOutOfRange,
  kDegenerate,
  kFlavorMismatch,
  kNoGamma,
  kInconsistentRh,
  kNotSubgroupOfH,
  kSearchExhausted,
  kInconsistentOrbifold,
  kIdentityInput,
  kNonMonomial,
  kAuditFail,
  kShapeMismatch,
  kInvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Exception carrying a machine-readable code; what() names the failed predicate.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fermat

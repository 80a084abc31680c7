#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace braidoka {

enum class ErrorCode {
  ParseError,
  InvalidArgument,
  IdentityInput,
  StrandMismatch,
  WrongStrandCount,
  NotPure,
  NotParabolic,
  InternalInconsistency,
  ResourceLimit,
  NotPrime,
  NotCommuting,
  NotTransitive,
  NotAbelianTransitive,
  DegreeTooSmall,
  SeparabilityFailure,
  NonConvergence,
  SignatureOutOfRange,
  DegenerateSignature,
  WrongSignature,
  WrongTarget,
  TheoremContradiction,
  PoleProximity,
  UsageError,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this one exception type; the
// code distinguishes the cases callers are expected to branch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace braidoka

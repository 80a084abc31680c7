#include "braidoka/error.hpp"

namespace braidoka {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IdentityInput: return "IdentityInput";
    case ErrorCode::StrandMismatch: return "StrandMismatch";
    case ErrorCode::WrongStrandCount: return "WrongStrandCount";
    case ErrorCode::NotPure: return "NotPure";
    case ErrorCode::NotParabolic: return "NotParabolic";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NotCommuting: return "NotCommuting";
    case ErrorCode::NotTransitive: return "NotTransitive";
    case ErrorCode::NotAbelianTransitive: return "NotAbelianTransitive";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::SeparabilityFailure: return "SeparabilityFailure";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::SignatureOutOfRange: return "SignatureOutOfRange";
    case ErrorCode::DegenerateSignature: return "DegenerateSignature";
    case ErrorCode::WrongSignature: return "WrongSignature";
    case ErrorCode::WrongTarget: return "WrongTarget";
    case ErrorCode::TheoremContradiction: return "TheoremContradiction";
    case ErrorCode::PoleProximity: return "PoleProximity";
    case ErrorCode::UsageError: return "UsageError";
  }
  return "Unknown";
}

}  // namespace braidoka

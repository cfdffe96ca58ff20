#include "cellkit/errors.hpp"

namespace cellkit {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidMatrix: return "InvalidMatrix";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::ConjugacyViolation: return "ConjugacyViolation";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NotInDomain: return "NotInDomain";
    case ErrorCode::WrongOrder: return "WrongOrder";
    case ErrorCode::WrongWeights: return "WrongWeights";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::UnequalWeights: return "UnequalWeights";
    case ErrorCode::UnverifiedPair: return "UnverifiedPair";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "Error";
}

}  // namespace cellkit

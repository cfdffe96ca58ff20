#pragma once

#include <stdexcept>
#include <string>

namespace cellkit {

enum class ErrorCode {
  InvalidMatrix,
  GroupTooLarge,
  NonPositiveWeight,
  ConjugacyViolation,
  PreconditionViolated,
  NotInDomain,
  WrongOrder,
  WrongWeights,
  NotClosed,
  UnequalWeights,
  UnverifiedPair,
  ConfigError,
};

const char* error_code_name(ErrorCode code);

/// All recoverable failure modes carry a code plus a human-readable message.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace cellkit

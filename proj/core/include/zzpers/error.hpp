#pragma once

#include <stdexcept>
#include <string>

namespace zzp {

enum class ErrorCode {
  InvalidInput,       // malformed file, invalid filtration, bad arguments
  InvalidCone,
  NotAManifold,
  NotNonRepetitive,
  InvalidDiamond,
  InvalidSwitch,
  ContextMismatch,
  OutOfRange,
  LabelMismatch,
  ContractViolation,
  Inconsistency,      // upstream data disagrees with a theorem-level invariant
};

/// Single exception type for the library. The code decides the CLI exit
/// status: 2 for invalid input, 3 for contract violations, 4 for internal
/// inconsistencies.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  int exit_code() const noexcept {
    switch (code_) {
      case ErrorCode::InvalidInput:
      case ErrorCode::ContextMismatch:
      case ErrorCode::OutOfRange:
        return 2;
      case ErrorCode::Inconsistency:
        return 4;
      default:
        return 3;
    }
  }

 private:
  ErrorCode code_;
};

}  // namespace zzp

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace polyherm {

enum class ErrorCode {
  AlphaZero,
  AlphaNotPositive,
  DegenerateParams,
  QuadMismatch,
  OrderTooLow,
  RegimeViolation,
  ConstraintViolated,
  NoConvergence,
  TruncationInsufficient,
  DomainError,
  UsageError,
};

std::string_view error_name(ErrorCode code);

/// Precondition or evaluation failure carrying a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace polyherm

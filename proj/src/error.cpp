#include "polyherm/error.hpp"

namespace polyherm {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::AlphaZero: return "AlphaZero";
    case ErrorCode::AlphaNotPositive: return "AlphaNotPositive";
    case ErrorCode::DegenerateParams: return "DegenerateParams";
    case ErrorCode::QuadMismatch: return "QuadMismatch";
    case ErrorCode::OrderTooLow: return "OrderTooLow";
    case ErrorCode::RegimeViolation: return "RegimeViolation";
    case ErrorCode::ConstraintViolated: return "ConstraintViolated";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::TruncationInsufficient: return "TruncationInsufficient";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::UsageError: return "UsageError";
  }
  return "Unknown";
}

}  // namespace polyherm

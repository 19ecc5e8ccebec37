#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace flk {

enum class ErrorCode {
  MalformedToken,
  IndexOutOfRange,
  NonPositiveStrands,
  StrandMismatch,
  OccurrenceCount,
  EmptyInput,
  InvalidMove,
  OutOfRange,
  ThreadRequiresTwoStrands,
  InvalidBudget,
  ModulusTooLarge,
  BudgetExceeded,
  RelationViolation,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MalformedToken: return "MalformedToken";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NonPositiveStrands: return "NonPositiveStrands";
    case ErrorCode::StrandMismatch: return "StrandMismatch";
    case ErrorCode::OccurrenceCount: return "OccurrenceCount";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::InvalidMove: return "InvalidMove";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::ThreadRequiresTwoStrands: return "ThreadRequiresTwoStrands";
    case ErrorCode::InvalidBudget: return "InvalidBudget";
    case ErrorCode::ModulusTooLarge: return "ModulusTooLarge";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::RelationViolation: return "RelationViolation";
  }
  return "Unknown";
}

/// Every recoverable failure in the library is reported through this type;
/// code() identifies the condition and what() carries the diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace flk

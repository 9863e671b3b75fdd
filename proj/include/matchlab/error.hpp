#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace matchlab {

enum class ErrorCode {
  // input errors
  SelfLoop,
  VertexOutOfRange,
  EdgeNotPresent,
  NotAMatching,
  NotASubMatching,
  NotAPerfectMatching,
  InfeasibleDegreeSequence,
  InvalidParameter,
  UnbalancedBipartition,
  NotBipartite,
  NotRegular,
  NoPerfectMatching,
  EmptyStratum,
  SinkVertex,
  ZeroEntry,
  ParseError,
  // size / budget errors
  GenerationTimeout,
  TooLarge,
  TooLargeForExactSweep,
  TooManyMatchings,
  BudgetExceeded,
  ExactInfeasible,
};

std::string_view to_string(ErrorCode code) noexcept;

/// True for errors raised because an instance exceeds a configured size or
/// work budget, as opposed to malformed input.
constexpr bool is_size_error(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::GenerationTimeout:
    case ErrorCode::TooLarge:
    case ErrorCode::TooLargeForExactSweep:
    case ErrorCode::TooManyMatchings:
    case ErrorCode::BudgetExceeded:
    case ErrorCode::ExactInfeasible:
      return true;
    default:
      return false;
  }
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace matchlab

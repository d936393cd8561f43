#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace flatinc {

enum class ErrorCode {
  ZeroVector,
  MixedAmbient,
  PointInCenter,
  KOutOfRange,
  EmptyPointList,
  AlphaOutOfRange,
  GammaOutOfRange,
  EmptyConfiguration,
  BudgetExceeded,
  PreconditionViolated,
  InvariantViolated,
  SizeOverflow,
  OddN,
  ParameterConflict,
  DivisibilityError,
  RetryLimit,
  ParameterError,
  ParseError,
};

std::string_view to_string(ErrorCode code);

// Every library failure is reported through this type; `code()` lets callers
// and tests distinguish the cases without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace flatinc

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace matcon {

enum class ErrorCode {
  // input shape
  InvalidResourceCount,
  DimensionMismatch,
  NonPositiveProcessingTime,
  NegativeQuantity,
  NegativeSupplyDate,
  ResourceIndexOutOfRange,
  ParseError,
  // instance semantics
  InsufficientTotalSupply,
  NotNormalized,
  Infeasible,
  // schedules
  MissingJob,
  DuplicateJob,
  InvalidJobIndex,
  NegativeStart,
  ScheduleHasIdle,
  ScheduleInfeasible,
  CountOverflow,
  // solver preconditions
  SolverIncomplete,
  NotWeaklyOrdered,
  MultiResource,
  // resource caps
  CapExceeded,
  StateSpaceExceeded,
  // reductions
  SizeSumMismatch,
  TooManyObjects,
  DegenerateBase,
  InvalidBase,
};

std::string_view to_string(ErrorCode code);

/// True for the codes that signal a configured size cap rather than bad input.
bool is_cap_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace matcon

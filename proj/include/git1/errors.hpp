#pragma once

#include <stdexcept>
#include <string>

namespace git1 {

enum class ErrorKind {
  Parse,
  UnmarkedComponent,
  DuplicateMark,
  MissingMark,
  AnchorClash,
  SingularityBoundExceeded,
  BadAnchor,
  MalformedTail,
  BudgetExceeded,
  DimensionMismatch,
  ConstancyViolation,
  InvalidForMStability,
  GenusLost,
  HypothesisViolated,
  PositionClash,
  ZeroScaling,
  ChartInvalid,
  ZeroLambda,
  DivisionByZero,
  Unsupported,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// True for errors caused by bad input rather than a failed internal check.
bool is_input_error(ErrorKind kind);

}  // namespace git1

#include "git1/errors.hpp"

namespace git1 {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::UnmarkedComponent: return "UnmarkedComponent";
    case ErrorKind::DuplicateMark: return "DuplicateMark";
    case ErrorKind::MissingMark: return "MissingMark";
    case ErrorKind::AnchorClash: return "AnchorClash";
    case ErrorKind::SingularityBoundExceeded: return "SingularityBoundExceeded";
    case ErrorKind::BadAnchor: return "BadAnchor";
    case ErrorKind::MalformedTail: return "MalformedTail";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ConstancyViolation: return "ConstancyViolation";
    case ErrorKind::InvalidForMStability: return "InvalidForMStability";
    case ErrorKind::GenusLost: return "GenusLost";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::PositionClash: return "PositionClash";
    case ErrorKind::ZeroScaling: return "ZeroScaling";
    case ErrorKind::ChartInvalid: return "ChartInvalid";
    case ErrorKind::ZeroLambda: return "ZeroLambda";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::Unsupported: return "Unsupported";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + detail), kind_(kind) {}

bool is_input_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ConstancyViolation:
    case ErrorKind::GenusLost:
    case ErrorKind::DivisionByZero:
      return false;
    default:
      return true;
  }
}

}  // namespace git1

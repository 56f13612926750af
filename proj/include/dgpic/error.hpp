#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dgpic {

enum class ErrorCode {
  DegreeWindowExceeded,
  NotConfluent,
  NonHomogeneousRelation,
  InhomogeneousInput,
  NotACocycle,
  DimensionMismatch,
  RadicalUndetermined,
  ParameterFieldMismatch,
  ParseError,
  UnknownGenerator,
  BadField,
  BadDifferentialDegree,
  BadPrime,
  FieldMismatch,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegreeWindowExceeded: return "DegreeWindowExceeded";
    case ErrorCode::NotConfluent: return "NotConfluent";
    case ErrorCode::NonHomogeneousRelation: return "NonHomogeneousRelation";
    case ErrorCode::InhomogeneousInput: return "InhomogeneousInput";
    case ErrorCode::NotACocycle: return "NotACocycle";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::RadicalUndetermined: return "RadicalUndetermined";
    case ErrorCode::ParameterFieldMismatch: return "ParameterFieldMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::BadField: return "BadField";
    case ErrorCode::BadDifferentialDegree: return "BadDifferentialDegree";
    case ErrorCode::BadPrime: return "BadPrime";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (the pipeline in particular) can embed it in a report.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), message_(what) {}

  ErrorCode code() const noexcept { return code_; }
  /// The text without the code prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

}  // namespace dgpic

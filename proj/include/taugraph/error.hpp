#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace taugraph {

enum class ErrorCode {
  NonPositiveLength,
  Disconnected,
  EmptyGraph,
  BadEdgeId,
  TOutOfRange,
  IndexOutOfRange,
  SingularBeyondNullspace,
  NumericalInconsistency,
  SpecialConditionsNotMet,
  PreconditionNotMet,
  TooLarge,
  TooLargeForMethod,
  ParameterOutOfRange,
  ParityViolation,
  DegenerateChord,
  IoError,
  ParseError,
  VerificationFailed,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPositiveLength: return "NonPositiveLength";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::BadEdgeId: return "BadEdgeId";
    case ErrorCode::TOutOfRange: return "TOutOfRange";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::SingularBeyondNullspace: return "SingularBeyondNullspace";
    case ErrorCode::NumericalInconsistency: return "NumericalInconsistency";
    case ErrorCode::SpecialConditionsNotMet: return "SpecialConditionsNotMet";
    case ErrorCode::PreconditionNotMet: return "PreconditionNotMet";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::TooLargeForMethod: return "TooLargeForMethod";
    case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::ParityViolation: return "ParityViolation";
    case ErrorCode::DegenerateChord: return "DegenerateChord";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace taugraph

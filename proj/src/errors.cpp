#include "maip/errors.hpp"

namespace maip {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MixedVariable: return "MixedVariable";
    case ErrorCode::MissingSymbol: return "MissingSymbol";
    case ErrorCode::SymbolicExponent: return "SymbolicExponent";
    case ErrorCode::Syntax: return "SyntaxError";
    case ErrorCode::Validation: return "ValidationError";
    case ErrorCode::DirectionMismatch: return "DirectionMismatch";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::OrientationMismatch: return "OrientationMismatch";
    case ErrorCode::NotClassical: return "NotClassical";
    case ErrorCode::HasSingular: return "HasSingular";
    case ErrorCode::NoSingular: return "NoSingular";
    case ErrorCode::InconsistentPlan: return "InconsistentPlan";
    case ErrorCode::NotApplicable: return "NotApplicable";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

ParseError::ParseError(int line, int column, const std::string& message)
    : Error(ErrorCode::Syntax, "line " + std::to_string(line) + ", column " +
                                   std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

}  // namespace maip

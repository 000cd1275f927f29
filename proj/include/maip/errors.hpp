#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace maip {

enum class ErrorCode {
  MixedVariable,
  MissingSymbol,
  SymbolicExponent,
  Syntax,
  Validation,
  DirectionMismatch,
  ArityMismatch,
  OrientationMismatch,
  NotClassical,
  HasSingular,
  NoSingular,
  InconsistentPlan,
  NotApplicable,
};

std::string_view error_code_name(ErrorCode code);

// Single exception type for the library; `code()` distinguishes the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Text-format syntax error; line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace maip

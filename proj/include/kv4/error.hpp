#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kv4 {

/// Every failure the library reports carries one of these names. The CLI
/// prints the name verbatim, so they are part of the external interface.
enum class ErrorCode {
  DivisionByZero,
  ZeroPolynomial,
  InvalidField,
  FieldMismatch,
  ShapeMismatch,
  ParseError,
  NotSquareZeroA,
  NotSquareZeroB,
  NotCommuting,
  InvalidLabel,
  NotProjectiveFree,
  NotSquare,
  NotMinimal,
  NotASummand,
  NotIndecomposable,
  NotACocycle,
  NotDiagrammable,
  Inconclusive,
  SearchExhausted,
  InternalError,
};

std::string_view error_name(ErrorCode code) noexcept;

/// True for codes that signal a broken internal contract rather than bad input.
bool is_internal(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace kv4

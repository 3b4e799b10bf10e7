#include "kv4/error.hpp"

namespace kv4 {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotSquareZeroA: return "NotSquareZeroA";
    case ErrorCode::NotSquareZeroB: return "NotSquareZeroB";
    case ErrorCode::NotCommuting: return "NotCommuting";
    case ErrorCode::InvalidLabel: return "InvalidLabel";
    case ErrorCode::NotProjectiveFree: return "NotProjectiveFree";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NotMinimal: return "NotMinimal";
    case ErrorCode::NotASummand: return "NotASummand";
    case ErrorCode::NotIndecomposable: return "NotIndecomposable";
    case ErrorCode::NotACocycle: return "NotACocycle";
    case ErrorCode::NotDiagrammable: return "NotDiagrammable";
    case ErrorCode::Inconclusive: return "Inconclusive";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "InternalError";
}

bool is_internal(ErrorCode code) noexcept {
  return code == ErrorCode::Inconclusive || code == ErrorCode::SearchExhausted ||
         code == ErrorCode::NotMinimal || code == ErrorCode::InternalError;
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

}  // namespace kv4

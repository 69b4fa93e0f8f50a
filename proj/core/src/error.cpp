#include "platknot/error.hpp"

namespace platknot {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::StrandMismatch: return "StrandMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::WidthTooSmall: return "WidthTooSmall";
    case ErrorCode::EvenHeight: return "EvenHeight";
    case ErrorCode::RowCountMismatch: return "RowCountMismatch";
    case ErrorCode::WrongRowLength: return "WrongRowLength";
    case ErrorCode::NotHighlyTwisted: return "NotHighlyTwisted";
    case ErrorCode::DimensionsOutOfTheoremRange: return "DimensionsOutOfTheoremRange";
    case ErrorCode::DivisionByZeroTail: return "DivisionByZeroTail";
    case ErrorCode::NotRepresentable: return "NotRepresentable";
    case ErrorCode::IndexParity: return "IndexParity";
    case ErrorCode::IndexRange: return "IndexRange";
    case ErrorCode::TooManyCrossings: return "TooManyCrossings";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::Incomparable: return "Incomparable";
    case ErrorCode::InvalidSphere: return "InvalidSphere";
    case ErrorCode::OutOfRange: return "OutOfRange";
  }
  return "Unknown";
}

}  // namespace platknot

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace platknot {

enum class ErrorCode {
  ParseError,
  StrandMismatch,
  IndexOutOfRange,
  WidthTooSmall,
  EvenHeight,
  RowCountMismatch,
  WrongRowLength,
  NotHighlyTwisted,
  DimensionsOutOfTheoremRange,
  DivisionByZeroTail,
  NotRepresentable,
  IndexParity,
  IndexRange,
  TooManyCrossings,
  DimensionMismatch,
  Incomparable,
  InvalidSphere,
  OutOfRange,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure in the library is reported through this type; the code is
// stable and is what the CLI prints in its machine-readable error line.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace platknot

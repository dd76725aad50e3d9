#ifndef TEXTILE_ERRORS_HPP
#define TEXTILE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace textile {

/// Error categories surfaced by the library. Each maps to one of the
/// documented failure modes of the public operations.
enum class Errc {
  DivisionByZero,
  NonInvertible,
  ModulusMismatch,
  RingMismatch,
  OrderMismatch,
  ZeroPolynomial,
  CapExceeded,
  BadBounds,
  OutOfRange,
  InsufficientCap,
  AlphaListTooShort,
  DuplicateAlphas,
  ComponentMismatch,
  NotZeroDimensionalHandled,
  ParseError,
  ValidationError,
  Internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

/// Parse failure with 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(Errc::ParseError,
              what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace textile

#endif

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ambig {

/// Failure categories surfaced by the library. The CLI maps each code to a
/// stable upper-case token (see `error_code_name`).
enum class ErrorCode {
  ParseError,
  EmptyLanguage,
  NotTrim,
  NotShiftable,
  PreconditionViolated,
  ExceedsMax,
  DepthExceeded,
  LengthExceeded,
  HashSymbolClash,
  InvalidArgument,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Syntax or validation error in an automaton file or word literal.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& detail)
      : Error(ErrorCode::ParseError, format(line, detail)), line_(line) {}

  /// 1-based line number, 0 when the error is not tied to a line.
  std::size_t line() const noexcept { return line_; }

 private:
  static std::string format(std::size_t line, const std::string& detail) {
    return line == 0 ? detail : "line " + std::to_string(line) + ": " + detail;
  }

  std::size_t line_;
};

}  // namespace ambig

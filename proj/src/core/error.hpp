#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tgame {

enum class ErrorCode {
  InvalidArgument,
  ParseError,
  IndexOutOfRange,
  EmptyEdge,
  IllegalMove,
  LimitExceeded,
  NotUniform,
  UnreachableCell,
  UnknownName,
  IsolatedVertex,
  HypothesisViolated,
  Unsatisfiable,
  NoAttachedEdgeUncovered,
  Io,
};

std::string_view error_code_name(ErrorCode code);

// Every failure inside the core is reported through this exception; the C API
// translates the code into a status value.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// ParseError carries the offending 1-based line number.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& reason)
      : Error(ErrorCode::ParseError,
              "line " + std::to_string(line) + ": " + reason),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace tgame

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace pomax {

// Error families map 1:1 onto CLI exit codes: parse=2, validation=3, bound=4.
enum class ErrorCode { Parse = 2, Validation = 3, Bound = 4 };

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string kind, const std::string& msg)
      : std::runtime_error(kind + ": " + msg), code_(code), kind_(std::move(kind)) {}

  ErrorCode code() const { return code_; }
  const std::string& kind() const { return kind_; }

 private:
  ErrorCode code_;
  std::string kind_;
};

// Malformed input text/documents (DIMACS, JSON, CLI arguments).
struct ParseError : Error {
  ParseError(std::string kind, const std::string& msg)
      : Error(ErrorCode::Parse, std::move(kind), msg) {}
};

// Structurally invalid data (cycles, redundant covers, wrong ground, ...).
struct ValidationError : Error {
  ValidationError(std::string kind, const std::string& msg)
      : Error(ErrorCode::Validation, std::move(kind), msg) {}
};

// Configured size limits exceeded without an explicit force/override.
struct BoundError : Error {
  BoundError(std::string kind, const std::string& msg)
      : Error(ErrorCode::Bound, std::move(kind), msg) {}
};

}  // namespace pomax

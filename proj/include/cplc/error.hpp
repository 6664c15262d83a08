#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cplc {

enum class ErrorKind {
  parse,         // malformed input text
  validation,    // well-formed input that violates a data invariant
  precondition,  // valid data that an operation cannot accept
  invariant,     // internal consistency failure
};

/// Base for every error raised by the library. The kind maps onto CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorKind::parse, "line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(ErrorKind::validation, what) {}
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what) : Error(ErrorKind::precondition, what) {}
};

/// A measure whose formula degenerates (e.g. 0/0) for the given input.
class UndefinedMeasure : public PreconditionError {
 public:
  explicit UndefinedMeasure(const std::string& what) : PreconditionError(what) {}
};

class InvariantError : public Error {
 public:
  explicit InvariantError(const std::string& what) : Error(ErrorKind::invariant, what) {}
};

inline int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse:
    case ErrorKind::validation:
      return 1;
    case ErrorKind::precondition:
      return 2;
    case ErrorKind::invariant:
      return 3;
  }
  return 3;
}

}  // namespace cplc

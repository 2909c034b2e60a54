#pragma once

#include <stdexcept>
#include <string>

namespace riswpc {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
  /// Short machine-readable category, e.g. "validation" or "domain".
  virtual const char* kind() const noexcept { return "error"; }
};

/// Malformed configuration document.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  const char* kind() const noexcept override { return "parse"; }
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// A configuration value violates an invariant.
class ValidationError : public Error {
 public:
  ValidationError(std::string field, const std::string& what)
      : Error(field + ": " + what), field_(std::move(field)) {}
  const char* kind() const noexcept override { return "validation"; }
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "domain"; }
};

/// Vector lengths of a channel draw and a configuration disagree.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "dimension"; }
};

/// A moment fit has zero variance.
class DegenerateError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "degenerate"; }
};

/// Power budget below the alpha-independent consumption floor.
class InfeasibleBudget : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "infeasible"; }
};

/// The rate derivative never changes sign on (0, 1).
class NoInteriorMaximum : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "no_interior_maximum"; }
};

/// Wraps another library error with context while keeping its kind.
class AnnotatedError : public Error {
 public:
  AnnotatedError(const Error& cause, const std::string& context)
      : Error(context + ": " + cause.what()), kind_(cause.kind()) {}
  const char* kind() const noexcept override { return kind_.c_str(); }

 private:
  std::string kind_;
};

}  // namespace riswpc

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fecheck {

/// Base of every failure raised while evaluating a field expression at a
/// concrete point. Verdict-producing checks catch this per sample.
class EvaluationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DivisionByZero : public EvaluationError {
 public:
  DivisionByZero() : EvaluationError("division by zero") {}
  explicit DivisionByZero(const std::string& what) : EvaluationError(what) {}
};

/// Substituting a constant that is a pole of the rational function.
class CompositionUndefined : public EvaluationError {
 public:
  using EvaluationError::EvaluationError;
};

class ArityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularSystem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax or type error in the expression language, 1-based position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        message_(message),
        line_(line),
        column_(column) {}

  const std::string& message() const noexcept { return message_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace fecheck

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cyh {

// Base for every failure the library reports. Each subclass maps to a
// distinct CLI exit status (see tools/cyhilbert.cpp).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// -- input / parsing ---------------------------------------------------------

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class NonPrimitiveNormalError : public ParseError {
 public:
  using ParseError::ParseError;
};

class NonIntegerOffsetError : public ParseError {
 public:
  using ParseError::ParseError;
};

// A facet line whose field count does not match dim + 1.
class DimMismatchError : public ParseError {
 public:
  using ParseError::ParseError;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

// -- polytope validation -----------------------------------------------------

class ValidationError : public Error {
 public:
  using Error::Error;
};

class NonSimpleError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class UnboundedError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class EmptyError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class RedundantFacetError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotDelzantError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// -- computation -------------------------------------------------------------

class DegenerateTriangulationError : public Error {
 public:
  using Error::Error;
};

class ChamberCrossedError : public Error {
 public:
  using Error::Error;
};

class BudgetExceededError : public Error {
 public:
  BudgetExceededError(std::uint64_t required, std::uint64_t budget)
      : Error("enumeration needs " + std::to_string(required) +
              " points, budget is " + std::to_string(budget)),
        required_(required),
        budget_(budget) {}
  std::uint64_t required() const { return required_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

class TruncationError : public Error {
 public:
  using Error::Error;
};

// A proven identity failed to hold. Always an implementation bug or bad input.
class FormulaViolationError : public Error {
 public:
  using Error::Error;
};

class NotPolynomialError : public FormulaViolationError {
 public:
  using FormulaViolationError::FormulaViolationError;
};

class DisagreementError : public FormulaViolationError {
 public:
  using FormulaViolationError::FormulaViolationError;
};

}  // namespace cyh

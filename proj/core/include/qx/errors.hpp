#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace qx {

// Base of every error the library reports. `kind()` is a stable identifier
// used in diagnostics and HTTP error bodies.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

// Parse failures carry the character offset into the source text.
class ParseError : public Error {
 public:
  ParseError(std::string kind, const std::string& message, std::size_t offset)
      : Error(std::move(kind), message + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class SyntaxError : public ParseError {
 public:
  SyntaxError(const std::string& message, std::size_t offset)
      : ParseError("SyntaxError", message, offset) {}
};

class NonPositiveConstant : public ParseError {
 public:
  NonPositiveConstant(const std::string& message, std::size_t offset)
      : ParseError("NonPositiveConstant", message, offset) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& message) : Error("DomainError", message) {}
};

class InconclusiveComparison : public Error {
 public:
  explicit InconclusiveComparison(const std::string& message)
      : Error("Inconclusive", message) {}
};

class InvalidConstant : public Error {
 public:
  explicit InvalidConstant(const std::string& message) : Error("InvalidConstant", message) {}
};

class SolverError : public Error {
 public:
  explicit SolverError(const std::string& message) : Error("SolverError", message) {}
};

class InsufficientData : public Error {
 public:
  explicit InsufficientData(const std::string& message)
      : Error("InsufficientData", message) {}
};

class DegenerateData : public Error {
 public:
  explicit DegenerateData(const std::string& message) : Error("DegenerateData", message) {}
};

class NonMonotoneQubitRequirement : public Error {
 public:
  explicit NonMonotoneQubitRequirement(const std::string& message)
      : Error("NonMonotoneQubitRequirement", message) {}
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& message) : Error("ValidationError", message) {}
};

// Catalog / data-file errors reference the 1-based row they came from.
class SchemaError : public Error {
 public:
  SchemaError(const std::string& message, std::size_t row)
      : Error("SchemaError", "row " + std::to_string(row) + ": " + message), row_(row) {}

  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

class ExpressionError : public Error {
 public:
  ExpressionError(const std::string& message, std::size_t row, std::size_t offset)
      : Error("ExpressionError", "row " + std::to_string(row) + ": " + message),
        row_(row),
        offset_(offset) {}

  std::size_t row() const noexcept { return row_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t row_;
  std::size_t offset_;
};

class UnknownEntry : public Error {
 public:
  explicit UnknownEntry(const std::string& id) : Error("UnknownEntry", "unknown entry '" + id + "'") {}
};

class UnknownProvider : public Error {
 public:
  explicit UnknownProvider(const std::string& name)
      : Error("UnknownProvider", "unknown provider '" + name + "'") {}
};

class UnknownScenario : public Error {
 public:
  explicit UnknownScenario(const std::string& name)
      : Error("UnknownScenario", "unknown scenario '" + name + "'") {}
};

}  // namespace qx

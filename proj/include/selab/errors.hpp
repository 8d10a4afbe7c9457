#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace selab {

/// Malformed caller input: wrong lengths, out-of-range indices, mismatched parents.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A structure failed one of its defining axioms. The message names the axiom
/// and the witness that broke it.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string axiom, std::string witness)
      : std::runtime_error(axiom + " violated at " + witness),
        axiom_(std::move(axiom)),
        witness_(std::move(witness)) {}

  const std::string& axiom() const noexcept { return axiom_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string axiom_;
  std::string witness_;
};

/// An enumeration would exceed its configured order bound.
class CapacityError : public std::runtime_error {
 public:
  CapacityError(const std::string& what, std::size_t order, std::size_t bound)
      : std::runtime_error(what + ": order " + std::to_string(order) +
                           " exceeds bound " + std::to_string(bound)),
        order_(order),
        bound_(bound) {}

  std::size_t order() const noexcept { return order_; }
  std::size_t bound() const noexcept { return bound_; }

 private:
  std::size_t order_;
  std::size_t bound_;
};

/// Two independent constructions of the same object disagreed. Always a bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Script/descriptor text that does not parse or bind.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                           ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace selab

#pragma once

#include <stdexcept>
#include <string>

namespace deon {

// Base for all engine errors so callers can catch the whole family at once.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input text is not well-formed .norm syntax.
struct SyntaxError : Error {
  SyntaxError(int line, int column, const std::string& what_arg)
      : Error("syntax error at " + std::to_string(line) + ":" + std::to_string(column) + ": " +
              what_arg),
        line(line),
        column(column) {}
  int line;
  int column;
};

// Well-formed text violating a declaration rule (undeclared atom, duplicate partition, ...).
struct ValidationError : Error {
  using Error::Error;
};

// A formula does not have the shape an operation requires (e.g. literal-conditional norm).
struct ShapeError : Error {
  using Error::Error;
};

// Nested modal operators fed to the boxed-literal tableau.
struct NestedModalityError : Error {
  using Error::Error;
};

// A modal operator over a non-literal fed to the boxed-literal tableau.
struct NonLiteralUnderBoxError : Error {
  using Error::Error;
};

// Brute-force oracle asked to enumerate past its guards.
struct GuardExceededError : Error {
  using Error::Error;
};

// Hypertableau derivation exceeded configured individual / branch-node budget.
struct ResourceLimitError : Error {
  using Error::Error;
};

// Two engines asked to answer the same query returned different results.
struct EngineDisagreementError : Error {
  using Error::Error;
};

}  // namespace deon

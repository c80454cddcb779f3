#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace epdl {

/// Malformed formula, program, or QDIMACS text.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Invalid model file or model construction.
class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller broke an operation's precondition (e.g. point outside U).
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A starred program reached the star-free (contextual) engine.
class StarFreeError : public ContractError {
 public:
  StarFreeError() : ContractError("star-free fragment only") {}
};

}  // namespace epdl

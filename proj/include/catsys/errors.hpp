#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace catsys {

/// Bad input: malformed strings, invalid ADE types, zero charges, duplicate
/// points. The CLI maps this to exit status 1.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed token in a comma-separated list; token_index is 0-based.
class ParseError : public ValidationError {
 public:
  ParseError(std::size_t token_index, const std::string& what)
      : ValidationError("token " + std::to_string(token_index) + ": " + what), token_index_(token_index) {}
  std::size_t token_index() const { return token_index_; }

 private:
  std::size_t token_index_;
};

/// A mathematical property that must hold did not. Seeing one of these means
/// the implementation is wrong, not the input. The CLI maps this to exit 2.
class PropertyViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace catsys

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace latspec {

/// Base class for validation failures. Carries the indices of the offending
/// elements so callers can print a witness.
class LatticeError : public std::runtime_error {
 public:
  explicit LatticeError(const std::string& what,
                        std::vector<std::size_t> witness = {})
      : std::runtime_error(what), witness_(std::move(witness)) {}

  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  std::vector<std::size_t> witness_;
};

class PosetError : public LatticeError {
 public:
  using LatticeError::LatticeError;
};

class HomError : public LatticeError {
 public:
  using LatticeError::LatticeError;
};

/// Malformed input text; line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_, column_;
};

}  // namespace latspec

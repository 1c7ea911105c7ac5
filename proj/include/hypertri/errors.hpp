#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hypertri {

// Violated precondition of an operation (bad parameters, mismatched uniformity).
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Index or size argument outside its admissible range.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Instance larger than the fixed-width representation or the enumeration
// engine supports.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Malformed `.hg` input. `line()` is 1-based; 0 means "end of input".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace hypertri

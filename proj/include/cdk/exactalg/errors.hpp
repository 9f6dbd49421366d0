#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cdk {

/// Operands built over different numbers of coordinates.
class ArityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Evaluation hit a hyperplane x_i = x_j carried by the denominator.
class PoleError : public std::domain_error {
 public:
  PoleError(std::size_t i, std::size_t j)
      : std::domain_error("evaluation on pole x" + std::to_string(i + 1) + " = x" +
                          std::to_string(j + 1)),
        first_(i),
        second_(j) {}

  std::size_t first() const noexcept { return first_; }
  std::size_t second() const noexcept { return second_; }

 private:
  std::size_t first_;
  std::size_t second_;
};

/// Malformed canonical text or rational literal.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cdk

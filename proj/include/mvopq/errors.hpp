#pragma once

#include <stdexcept>
#include <string>

namespace mvopq {

struct DimensionError : std::invalid_argument {
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

struct DomainError : std::domain_error {
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Raised when an operation requires a definite parity and the argument lacks it.
struct ParityError : std::invalid_argument {
  explicit ParityError(const std::string& what) : std::invalid_argument(what) {}
};

struct SingularMatrixError : std::runtime_error {
  explicit SingularMatrixError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a Gram system degenerates; carries the first offending degree.
struct WeightNotPositiveError : std::runtime_error {
  int degree;
  explicit WeightNotPositiveError(int n)
      : std::runtime_error("Gram system singular at degree " + std::to_string(n) +
                           "; weight is not positive definite"),
        degree(n) {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// An identity that should hold exactly failed; carries the witness text.
struct ConsistencyError : std::runtime_error {
  explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mvopq

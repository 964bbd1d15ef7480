#ifndef NORMGAP_ERROR_HPP
#define NORMGAP_ERROR_HPP

#include <stdexcept>

namespace normgap {

/// Malformed or non-finite input data (bad CSV cell, NaN entry, empty vector).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A parameter lies outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The IRLS linear solve broke down even after regularization.
class SolverFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace normgap

#endif  // NORMGAP_ERROR_HPP

#pragma once

#include <stdexcept>
#include <string>

namespace lerchzeta {

/// Raised when an argument lies outside the region where the requested
/// representation is valid. The CLI maps this to exit code 2.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation requested on (or numerically too close to) a pole.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A table lookup beyond the generated degree.
class DegreeOverflow : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A series, quadrature or bisection failed to reach its tolerance within
/// the configured budget. The CLI maps this to exit code 3.
class NonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A sample contradicted a theorem clause (for instance a missing zero where
/// one is guaranteed). The CLI maps this to exit code 1.
class TheoremContradiction : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lerchzeta

#pragma once

#include <stdexcept>
#include <string>

namespace powerlog {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The radial solver could not satisfy one of its convergence checks.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computed result contradicts an invariant that should hold by construction
/// (e.g. the eigenfunction has the wrong number of nodes).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A 1-D search failed to bracket its target.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Requested (n, ell) row is not present in a dataset.
class LookupError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace powerlog

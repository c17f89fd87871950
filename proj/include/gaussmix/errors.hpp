#pragma once

#include <stdexcept>
#include <string>

namespace gaussmix {

/// Caller passed parameters outside their valid range (negative squeezing, bad mode index, ...).
class InvalidParameter : public std::invalid_argument {
 public:
  explicit InvalidParameter(const std::string& what) : std::invalid_argument(what) {}
};

/// Matrix has the wrong shape for the requested operation.
class DimensionMismatch : public std::invalid_argument {
 public:
  explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// A covariance matrix violates the uncertainty relation.
class NonPhysicalState : public std::domain_error {
 public:
  explicit NonPhysicalState(const std::string& what) : std::domain_error(what) {}
};

/// Formula evaluated outside its domain, e.g. threshold quantities at tau in {0, 1}.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Floating-point result that signals corrupted input (negative discriminant, ...).
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

class SingularMatrix : public NumericError {
 public:
  explicit SingularMatrix(const std::string& what) : NumericError(what) {}
};

}  // namespace gaussmix

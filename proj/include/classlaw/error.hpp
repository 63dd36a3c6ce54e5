#pragma once

#include <stdexcept>
#include <string>

namespace classlaw {

/// Input outside an operation's mathematical domain (ramified prime, p = 2,
/// mismatched discriminants, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A discriminant or other structured input failed validation.
class ValidationError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Coefficient rounding did not settle after the allowed precision retries.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured resource cap (precision bits, discriminant size) was hit.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A cache record is corrupt.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace classlaw

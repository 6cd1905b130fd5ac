#pragma once

#include <stdexcept>
#include <string>

namespace cryst {

// Base of every precondition failure reported by the library. The CLI maps
// these to exit code 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegreeMismatch : public DomainError {
 public:
  DegreeMismatch(int a, int b)
      : DomainError("degree mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

class RangeError : public DomainError {
 public:
  using DomainError::DomainError;
};

class ParseError : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotPure : public DomainError {
 public:
  NotPure() : DomainError("word is not a pure braid") {}
};

class InfiniteOrder : public DomainError {
 public:
  InfiniteOrder() : DomainError("element has infinite order") {}
};

class NotASolution : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotFrobenius : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace cryst

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hermipade {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BasisError : public Error {
 public:
  using Error::Error;
};

class DivisionByNonUnit : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class LengthError : public Error {
 public:
  using Error::Error;
};

class DegenerateError : public Error {
 public:
  using Error::Error;
};

class UpperTableError : public Error {
 public:
  using Error::Error;
};

class KindMismatch : public Error {
 public:
  using Error::Error;
};

class PoleOnSegment : public Error {
 public:
  using Error::Error;
};

// Raised when a residual coefficient that must vanish does not.
class ContractViolation : public Error {
 public:
  ContractViolation(const std::string& what, std::size_t function, std::size_t index)
      : Error(what), function_(function), index_(index) {}

  std::size_t function() const { return function_; }
  std::size_t index() const { return index_; }

 private:
  std::size_t function_;
  std::size_t index_;
};

}  // namespace hermipade

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace deo {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an input leaves the function class an operation is defined on.
// The CLI maps every DomainError to exit code 3.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Antiderivative from -infinity requested on an atom with Re(lambda) <= 0.
class NonIntegrableAtom : public DomainError {
 public:
  using DomainError::DomainError;
};

// 1/f is only representable for a single degree-0 atom.
class NotReciprocable : public DomainError {
 public:
  using DomainError::DomainError;
};

// Bad orders, powers or parameters handed to a constructor-like operation.
class InvalidOrder : public Error {
 public:
  using Error::Error;
};

class UnsupportedOrder : public Error {
 public:
  using Error::Error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class StencilOutOfRange : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::vector<std::string> expected, const std::string& found);

  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

}  // namespace deo

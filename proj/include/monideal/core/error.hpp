#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace monideal {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// The ideal does not contain a pure power of every variable.
class NotZeroDimensional : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A configured cost ceiling (basis size, degree, box cells, iterations) was hit.
class ResourceExceeded : public Error {
 public:
  using Error::Error;
};

/// An internal identity that must always hold was found violated.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace monideal

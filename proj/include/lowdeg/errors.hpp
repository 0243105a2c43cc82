#pragma once

#include <stdexcept>
#include <string>

namespace lowdeg {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An operation was called outside its documented domain.
class PreconditionError : public Error {
public:
  using Error::Error;
};

// Zero divisor where an inverse was required.
class NotInvertible : public Error {
public:
  using Error::Error;
};

// The numeric root finder did not converge on a square-free factor.
class FactorizationError : public Error {
public:
  FactorizationError(const std::string& what, std::string unsplit)
      : Error(what), unsplit_(std::move(unsplit)) {}

  const std::string& unsplit() const noexcept { return unsplit_; }

private:
  std::string unsplit_;
};

// A computed result contradicts an identity that must hold. Never expected.
class InconsistencyError : public Error {
public:
  using Error::Error;
};

}  // namespace lowdeg

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qxgcd {

// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// d is 0, 1 or not square-free (or the ring does not fit the operation).
class InvalidRing : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class ZeroIdeal : public Error {
 public:
  using Error::Error;
};

class ZeroInput : public Error {
 public:
  using Error::Error;
};

// A postcondition that the mathematics guarantees did not hold.
class InternalInvariant : public Error {
 public:
  using Error::Error;
};

class NotDefinite : public Error {
 public:
  using Error::Error;
};

class NotIndefinite : public Error {
 public:
  using Error::Error;
};

// The ideal has no element whose norm equals the ideal norm.
class NonPrincipal : public Error {
 public:
  using Error::Error;
};

class RankDeficient : public Error {
 public:
  using Error::Error;
};

class BoundTooSmall : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace qxgcd

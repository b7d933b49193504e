#ifndef PRIMDEC_ERROR_HPP
#define PRIMDEC_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace primdec {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RingMismatch : public Error {
 public:
  RingMismatch() : Error("operands belong to different rings") {}
};

class RankMismatch : public Error {
 public:
  RankMismatch(std::size_t a, std::size_t b)
      : Error("free module rank mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

class ExponentOverflow : public Error {
 public:
  ExponentOverflow() : Error("exponent overflow in monomial product") {}
};

/// Raised by lift() when a generator of the target is not in the source span.
class NotMember : public Error {
 public:
  explicit NotMember(std::size_t index)
      : Error("generator " + std::to_string(index) + " is not in the submodule"), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

/// Raised when an iterative construction exceeds its configured bound.
class IterationBound : public Error {
 public:
  using Error::Error;
};

/// Input that violates an operation's precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace primdec

#endif  // PRIMDEC_ERROR_HPP

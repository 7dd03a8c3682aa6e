#pragma once

#include <stdexcept>
#include <string>

namespace ricci {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input: bad edge lists, self-loops, out-of-range ids,
/// invalid generator or sampler parameters.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// The queried vertex pair is not an edge of the graph.
class NotAnEdge : public Error {
 public:
  NotAnEdge(unsigned long x, unsigned long y)
      : Error("(" + std::to_string(x) + "," + std::to_string(y) + ") is not an edge"),
        x_(x), y_(y) {}
  unsigned long x() const { return x_; }
  unsigned long y() const { return y_; }

 private:
  unsigned long x_;
  unsigned long y_;
};

/// A closed-form formula or theorem was asked for outside its domain.
class NotApplicable : public Error {
 public:
  using Error::Error;
};

/// An exhaustive oracle refused an instance above its configured size.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Two computation routes that must agree exactly did not. Always a bug.
class VerificationMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace ricci

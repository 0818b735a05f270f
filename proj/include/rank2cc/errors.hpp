#pragma once

#include <stdexcept>
#include <string>

namespace rank2cc {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller broke a documented precondition (bad vertex, wrong sizes, b < 1, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ContextMismatch : public Error {
 public:
  explicit ContextMismatch(const std::string& what)
      : Error("variable context mismatch: " + what) {}
};

/// No Laurent-polynomial quotient exists.
class NotDivisible : public Error {
 public:
  using Error::Error;
};

/// The computation could not reach a verdict. Subclasses say why.
class Inconclusive : public Error {
 public:
  using Error::Error;
};

/// Random sampling never produced a module with a one-dimensional endomorphism ring.
class NotRigid : public Inconclusive {
 public:
  using Inconclusive::Inconclusive;
};

/// Point counts did not agree with the interpolated polynomial at the held-out prime.
class NotPolynomial : public Inconclusive {
 public:
  using Inconclusive::Inconclusive;
};

/// The interpolated counting polynomial is not an integer at q = 1.
class NotIntegral : public Inconclusive {
 public:
  using Inconclusive::Inconclusive;
};

/// A resolution or time budget was exceeded.
class BudgetExceeded : public Inconclusive {
 public:
  using Inconclusive::Inconclusive;
};

}  // namespace rank2cc

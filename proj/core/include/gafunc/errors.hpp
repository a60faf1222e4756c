#pragma once

#include <stdexcept>
#include <string>

namespace gafunc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (multivectors, matrices, rationals, function names).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Operands from different algebras were combined.
class SignatureMismatch : public Error {
 public:
  using Error::Error;
};

/// The function (or one of its required derivatives) is undefined at a root.
class SingularFunction : public Error {
 public:
  SingularFunction(const std::string& function, const std::string& root)
      : Error("function '" + function + "' is singular at root " + root),
        function_(function),
        root_(root) {}

  const std::string& function() const { return function_; }
  const std::string& root() const { return root_; }

 private:
  std::string function_;
  std::string root_;
};

/// Root refinement did not reach the requested precision within its budget.
class NonConvergence : public Error {
 public:
  using Error::Error;
};

/// A result that must be real kept an imaginary part above tolerance.
class RealnessFailure : public Error {
 public:
  RealnessFailure(const std::string& message, double residual_log10)
      : Error(message), residual_log10_(residual_log10) {}

  /// log10 of the offending relative imaginary residual.
  double residual_log10() const { return residual_log10_; }

 private:
  double residual_log10_;
};

/// Multiplicity data contradicts the polynomial (vanishing recursion denominator).
class InconsistentMultiplicity : public Error {
 public:
  using Error::Error;
};

}  // namespace gafunc

#pragma once

#include <functional>
#include <string>
#include <string_view>

#include "gafunc/scalar.hpp"

namespace gafunc {

/// A scalar function together with its derivative tower.
///
/// The evaluator returns the plain derivative d^t f / dz^t at z (not divided by
/// t!). The singularity predicate answers whether f or any derivative up to the
/// given order is undefined at z; a root for which it returns true aborts the
/// computation with SingularFunction. Functions with f(conj z) = conj f(z) are
/// marked real_symmetric: applied to a real multivector their value must be
/// real, and a large imaginary residual is reported as RealnessFailure.
class FunctionSpec {
 public:
  using Evaluator = std::function<Complex(const Complex& z, int order)>;
  using Singularity = std::function<bool(const Complex& z, int order)>;

  FunctionSpec(std::string name, Evaluator evaluator, Singularity singular = {}, bool real_symmetric = false);

  static FunctionSpec exp();
  /// Principal branch; singular at 0 and on the negative real axis.
  static FunctionSpec log();
  /// Principal branch; singular at 0 and on the negative real axis.
  static FunctionSpec sqrt();
  static FunctionSpec sin();
  static FunctionSpec cos();
  /// z^alpha, principal branch for non-integral alpha.
  static FunctionSpec pow(const Rational& alpha);
  /// 1/z
  static FunctionSpec inv();
  /// f(z) = z
  static FunctionSpec identity();
  /// f(z) = z e^z, the spectral image of d/dt exp(tA) at t = 1.
  static FunctionSpec z_exp();

  /// "exp", "log", "sqrt", "sin", "cos", "inv", "pow:<rational>". Throws ParseError.
  static FunctionSpec parse(std::string_view text);

  const std::string& name() const { return name_; }
  bool real_symmetric() const { return real_symmetric_; }

  Complex derivative(const Complex& z, int order) const { return evaluator_(z, order); }
  bool singular_at(const Complex& z, int order) const { return singular_ && singular_(z, order); }

 private:
  std::string name_;
  Evaluator evaluator_;
  Singularity singular_;
  bool real_symmetric_;
};

}  // namespace gafunc

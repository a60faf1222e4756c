#pragma once

#include <vector>

#include "gafunc/multivector.hpp"
#include "gafunc/polynomial.hpp"

namespace gafunc {

/// Characteristic polynomial chi(x) = sum_k C_(d-k) x^k with the C_(0) = -1
/// sign convention, so that C_(1) is the trace and C_(d) = -det.
struct CharPolyResult {
  /// C_(0) .. C_(d)
  std::vector<Rational> coefficients;
  /// chi with leading coefficient -1.
  Polynomial<Rational> chi;

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  const Rational& trace() const { return coefficients[1]; }
  Rational determinant() const { return -coefficients.back(); }
  /// chi / (-1): the monic form, comparable with the minimal polynomial.
  Polynomial<Rational> monic() const { return -chi; }
};

/// Faddeev-LeVerrier-Souriau recursion in exact arithmetic:
///   A_(1) = A,  C_(k) = (d/k) <A_(k)>_0,  A_(k+1) = A (A_(k) - C_(k)).
/// Throws std::logic_error if A_(d+1) fails to vanish.
CharPolyResult char_poly(const Multivector<Rational>& a);

Rational determinant(const Multivector<Rational>& a);

/// True iff substituting A into chi gives exactly the zero multivector.
bool cayley_hamilton_check(const Multivector<Rational>& a);

/// sum_k p_k A^k, exact.
Multivector<Rational> substitute(const Polynomial<Rational>& p, const Multivector<Rational>& a);

}  // namespace gafunc

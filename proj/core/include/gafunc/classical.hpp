#pragma once

// Classical generalized spectral decomposition: partial fractions of 1/mu,
// idempotents p_i and nilpotents q_i, and Taylor assembly of f(A). Kept as an
// independent cross-check of the recursive construction in spectral.hpp.

#include <vector>

#include "gafunc/function_spec.hpp"
#include "gafunc/multivector.hpp"
#include "gafunc/polynomial.hpp"
#include "gafunc/roots.hpp"
#include "gafunc/spectral.hpp"

namespace gafunc {

struct ClassicalRoot {
  /// prod_{j != i} (x - lambda_j)^m_j
  Polynomial<Complex> psi;
  /// sum_{s < m_i} a_s (x - lambda_i)^s, the local series of 1/psi_i at lambda_i
  Polynomial<Complex> h;
  /// h psi mod mu
  Polynomial<Complex> p;
  /// q^1 .. q^(m_i - 1), q = (x - lambda_i) p mod mu
  std::vector<Polynomial<Complex>> q_powers;
};

struct ClassicalBasis {
  Polynomial<Rational> mu;
  RootSet roots;
  std::vector<ClassicalRoot> per_root;

  /// The same data in SpectralBasis layout: [p_i, q_i, q_i^2, ...] per root.
  SpectralBasis as_spectral() const;
};

ClassicalBasis classical_basis(const Polynomial<Rational>& mu, const RootSet& roots);

/// sum_i sum_k (1/k!) f^(k)(lambda_i) q_i^k p_i with x -> A (q^0 p = p).
Multivector<Complex> classical_function(const Multivector<Rational>& a, const ClassicalBasis& basis,
                                        const FunctionSpec& f);

/// Same, flattened over a power table of any algebra element.
std::vector<Complex> classical_function(const PowerTable& powers, const ClassicalBasis& basis, const FunctionSpec& f);

/// (lambda + q)^k truncated with q^m = 0; q_powers holds q^1 .. q^(m-1).
Polynomial<Complex> binomial_power(const Complex& lambda, const std::vector<Polynomial<Complex>>& q_powers, int k,
                                   int m);

}  // namespace gafunc

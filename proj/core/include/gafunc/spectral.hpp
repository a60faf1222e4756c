#pragma once

#include <vector>

#include "gafunc/multivector.hpp"
#include "gafunc/polynomial.hpp"
#include "gafunc/roots.hpp"

namespace gafunc {

/// The bivariate polynomials S^(j)(x, lambda) built from an annihilating
/// polynomial mu of degree D:
///
///   S^(0)(x, lambda) = (mu(lambda) - mu(x)) / (lambda - x)
///                    = sum_k sum_s lambda^s c_(s+k+1) x^k,
///   S^(j)            = (1/j!) d^j S^(0) / d lambda^j,
///
/// where c_i is the coefficient of x^i in mu. Nothing is stored beyond mu: the
/// coefficient of x^k lambda^s in S^(j) is binomial(s+j, j) c_(s+j+k+1).
class STable {
 public:
  STable(Polynomial<Rational> mu, int max_order);

  const Polynomial<Rational>& mu() const { return mu_; }
  int degree() const { return mu_.degree(); }
  /// Highest j for which S^(j) is requested (max multiplicity - 1).
  int max_order() const { return max_order_; }

  /// Coefficient of x^k lambda^s in S^(j).
  Rational coefficient(int j, int k, int s) const;

  /// S^(j)(x, lambda) as a polynomial in x; degree D - 1 - j at most.
  Polynomial<Complex> at(int j, const Complex& lambda) const;
  Polynomial<Rational> at(int j, const Rational& lambda) const;

  /// S^(j) with the lambda dependence kept: entry [k] is the polynomial in lambda
  /// multiplying x^k.
  std::vector<Polynomial<Rational>> symbolic(int j) const;

 private:
  Polynomial<Rational> mu_;
  int max_order_;
};

STable build_S_table(const Polynomial<Rational>& mu, int max_mult);

/// Generalized spectral basis: for every root lambda_i of multiplicity m_i the
/// polynomials Q_i^0 .. Q_i^(m_i - 1) in the dummy variable x. Q_i^0 are the
/// idempotents, Q_i^k (k >= 1) the nilpotent parts; all have degree < deg mu.
struct SpectralBasis {
  Polynomial<Rational> mu;
  RootSet roots;
  /// q[i][k] = Q_i^k
  std::vector<std::vector<Polynomial<Complex>>> q;

  const Polynomial<Complex>& Q(std::size_t root, int k) const { return q[root][static_cast<std::size_t>(k)]; }
};

/// Descending recursion over k for each root with multiplicity m:
///
///   Q^(m-1)   = S^(0)(x, lambda) / mu^(m)(lambda)
///   Q^(m-1-j) = (S^(j)(x, lambda) - sum_{t=1..j} Q^(m-1-j+t) mu^(m+t)(lambda)) / mu^(m)(lambda)
///
/// with weighted derivatives mu^(k) = (1/k!) d^k mu / d lambda^k. Each S^(j) has
/// degree below deg mu in x, so no reduction modulo mu is needed. Throws
/// InconsistentMultiplicity if mu^(m)(lambda) vanishes at a root.
SpectralBasis build_spectral_basis(const Polynomial<Rational>& mu, const RootSet& roots);

/// Flattened powers X^0, X^1, ... of an algebra element (multivector or matrix)
/// with exact entries, plus their numeric images at a fixed precision.
class PowerTable {
 public:
  PowerTable() = default;
  PowerTable(std::vector<std::vector<Rational>> exact, int digits);

  /// Number of stored powers (X^0 .. X^(count-1)).
  int count() const { return static_cast<int>(exact_.size()); }
  std::size_t width() const { return exact_.empty() ? 0 : exact_.front().size(); }
  int digits() const { return digits_; }
  const std::vector<Rational>& exact(int k) const { return exact_[static_cast<std::size_t>(k)]; }

  /// sum_k p_k X^k, flattened. Throws std::out_of_range if deg p >= count().
  std::vector<Complex> evaluate(const Polynomial<Complex>& p) const;

 private:
  std::vector<std::vector<Rational>> exact_;
  std::vector<std::vector<BigFloat>> numeric_;
  int digits_ = 0;
};

/// X^0 .. X^kmax of a multivector, flattened in blade order.
PowerTable mv_power_table(const Multivector<Rational>& a, int kmax, int digits);

struct DecompositionResidual {
  /// max |coefficient| of sum_i (lambda_i + Q_i^1) Q_i^0 - A, the product left unreduced
  BigFloat first;
  /// same for A^2 = sum_i sum_t binomial(2, t) lambda_i^(2-t) Q_i^t
  BigFloat second;
};

/// The sum sum_i (lambda_i + Q_i^1) Q_i^0 as an unreduced polynomial in x.
Polynomial<Complex> decomposition_polynomial(const SpectralBasis& basis);

/// sum_i sum_t binomial(k, t) lambda_i^(k-t) Q_i^t: the image of x^k in the basis.
Polynomial<Complex> power_polynomial(const SpectralBasis& basis, int k);

DecompositionResidual spectral_decomposition_check(const Multivector<Rational>& a, const SpectralBasis& basis);

/// Same check on any flattened algebra element. `powers` must hold at least
/// 2 deg(mu) - 1 powers; `target` X^1 and X^2 are taken from it.
DecompositionResidual spectral_decomposition_check(const PowerTable& powers, const SpectralBasis& basis);

}  // namespace gafunc

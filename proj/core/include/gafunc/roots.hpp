#pragma once

#include <optional>
#include <vector>

#include "gafunc/polynomial.hpp"
#include "gafunc/scalar.hpp"

namespace gafunc {

struct Root {
  Complex value;
  int multiplicity = 1;
  /// Index of the conjugate root in the owning RootSet (non-real roots only).
  std::optional<std::size_t> conjugate_partner;
  /// Real roots have an imaginary part that is exactly zero.
  bool is_real = false;
  /// Set when the root is rational; value is then its correctly rounded image.
  std::optional<Rational> exact;
};

struct RootSet {
  /// Sorted by (multiplicity, real part, imaginary part).
  std::vector<Root> entries;
  Polynomial<Rational> source;
  /// Estimated number of correct decimal digits of the weakest root.
  int achieved_digits = 0;

  std::size_t size() const { return entries.size(); }
  const Root& operator[](std::size_t i) const { return entries[i]; }
  int max_multiplicity() const;
  int total_multiplicity() const;
};

/// Distinct roots of mu with exact multiplicities.
///
/// Multiplicities come from the squarefree decomposition; each squarefree
/// factor is solved by Aberth-Ehrlich iteration started on a perturbed circle
/// and polished to the requested precision. Rational roots are detected exactly.
/// Non-real roots are paired with their conjugates and symmetrized. Throws
/// NonConvergence when a factor does not converge (after one retry at doubled
/// precision).
RootSet extract_roots(const Polynomial<Rational>& mu, Precision precision);

/// Roots of one squarefree factor (no pairing, no multiplicity bookkeeping).
std::vector<Complex> aberth_roots(const Polynomial<Rational>& squarefree, int digits);

/// prod (x - lambda_i)^m_i expanded numerically.
Polynomial<Complex> expand_roots(const RootSet& roots);

}  // namespace gafunc

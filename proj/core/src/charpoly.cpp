#include "gafunc/charpoly.hpp"

namespace gafunc {

CharPolyResult char_poly(const Multivector<Rational>& a) {
  const Signature& sig = a.signature();
  const int d = sig.char_degree();
  CharPolyResult result;
  result.coefficients.reserve(static_cast<std::size_t>(d) + 1);
  result.coefficients.emplace_back(-1);

  Multivector<Rational> current = a;  // A_(k)
  for (int k = 1; k <= d; ++k) {
    Rational c = Rational(d, k) * scalar_part(current);
    c.canonicalize();
    current = geometric_product(a, current - Multivector<Rational>::scalar(sig, c));
    result.coefficients.push_back(std::move(c));
  }
  if (!current.is_zero()) {
    throw std::logic_error("Faddeev-LeVerrier recursion did not terminate in " + to_string(sig));
  }

  std::vector<Rational> chi(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) chi[static_cast<std::size_t>(k)] = result.coefficients[static_cast<std::size_t>(d - k)];
  result.chi = Polynomial<Rational>(std::move(chi));
  return result;
}

Rational determinant(const Multivector<Rational>& a) { return char_poly(a).determinant(); }

Multivector<Rational> substitute(const Polynomial<Rational>& p, const Multivector<Rational>& a) {
  // Horner in the algebra.
  Multivector<Rational> acc(a.signature());
  for (int k = p.degree(); k >= 0; --k) {
    acc = geometric_product(acc, a);
    acc += Multivector<Rational>::scalar(a.signature(), p.coefficients()[static_cast<std::size_t>(k)]);
  }
  return acc;
}

bool cayley_hamilton_check(const Multivector<Rational>& a) { return substitute(char_poly(a).chi, a).is_zero(); }

}  // namespace gafunc

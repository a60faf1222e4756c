#include "gafunc/classical.hpp"

namespace gafunc {

ClassicalBasis classical_basis(const Polynomial<Rational>& mu_in, const RootSet& roots) {
  const Polynomial<Rational> mu = make_monic(mu_in);
  ClassicalBasis basis;
  basis.mu = mu;
  basis.roots = roots;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const Complex& lambda = roots[i].value;
    const int m = roots[i].multiplicity;
    const int digits = lambda.digits();
    ClassicalRoot cr;

    cr.psi = Polynomial<Complex>::constant(Complex(BigFloat(1L, digits)));
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (j != i) cr.psi = cr.psi * power(linear_factor(roots[j].value), roots[j].multiplicity);
    }

    // Taylor coefficients b_s of psi at lambda, then the series reciprocal a_s.
    std::vector<Complex> b, a;
    for (int s = 0; s < m; ++s) b.push_back(poly_eval(weighted_derivative(cr.psi, s), lambda));
    const Complex b0_inv = Complex(BigFloat(1L, digits)) / b[0];
    for (int s = 0; s < m; ++s) {
      if (s == 0) {
        a.push_back(b0_inv);
        continue;
      }
      Complex acc(BigFloat::with_bits(lambda.bits()), BigFloat::with_bits(lambda.bits()));
      for (int k = 1; k <= s; ++k) acc += b[static_cast<std::size_t>(k)] * a[static_cast<std::size_t>(s - k)];
      a.push_back(-acc * b0_inv);
    }

    const Polynomial<Complex> shift = linear_factor(lambda);
    Polynomial<Complex> shift_power = Polynomial<Complex>::constant(Complex(BigFloat(1L, digits)));
    for (int s = 0; s < m; ++s) {
      cr.h += shift_power * a[static_cast<std::size_t>(s)];
      shift_power = shift_power * shift;
    }

    cr.p = reduce_mod(cr.h * cr.psi, mu);
    if (m > 1) {
      const Polynomial<Complex> q = reduce_mod(shift * cr.p, mu);
      cr.q_powers.push_back(q);
      for (int k = 2; k < m; ++k) cr.q_powers.push_back(reduce_mod(cr.q_powers.back() * q, mu));
    }
    basis.per_root.push_back(std::move(cr));
  }
  return basis;
}

SpectralBasis ClassicalBasis::as_spectral() const {
  SpectralBasis out;
  out.mu = mu;
  out.roots = roots;
  for (const ClassicalRoot& cr : per_root) {
    std::vector<Polynomial<Complex>> list{cr.p};
    list.insert(list.end(), cr.q_powers.begin(), cr.q_powers.end());
    out.q.push_back(std::move(list));
  }
  return out;
}

std::vector<Complex> classical_function(const PowerTable& powers, const ClassicalBasis& basis, const FunctionSpec& f) {
  Polynomial<Complex> g;
  for (std::size_t i = 0; i < basis.per_root.size(); ++i) {
    const Root& root = basis.roots[i];
    const ClassicalRoot& cr = basis.per_root[i];
    if (f.singular_at(root.value, root.multiplicity - 1)) throw SingularFunction(f.name(), to_string(root.value, 20));
    g += cr.p * f.derivative(root.value, 0);
    for (int k = 1; k < root.multiplicity; ++k) {
      const Complex weight =
          f.derivative(root.value, k) / Complex(Rational(factorial(static_cast<unsigned long>(k))), root.value.digits());
      // q^k p = q^k modulo mu, since q already carries the factor p
      g += cr.q_powers[static_cast<std::size_t>(k - 1)] * weight;
    }
  }
  return powers.evaluate(g);
}

Multivector<Complex> classical_function(const Multivector<Rational>& a, const ClassicalBasis& basis,
                                        const FunctionSpec& f) {
  const int digits = basis.roots.entries.empty() ? kDefaultDigits : basis.roots[0].value.digits();
  const PowerTable powers = mv_power_table(a, std::max(basis.mu.degree() - 1, 0), digits);
  return Multivector<Complex>(a.signature(), classical_function(powers, basis, f));
}

Polynomial<Complex> binomial_power(const Complex& lambda, const std::vector<Polynomial<Complex>>& q_powers, int k,
                                   int m) {
  Polynomial<Complex> out = Polynomial<Complex>::constant(pow(lambda, static_cast<long>(k)));
  for (int t = 1; t <= k && t < m; ++t) {
    const Complex weight =
        pow(lambda, static_cast<long>(k - t)) *
        Complex(Rational(binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(t))), lambda.digits());
    out += q_powers[static_cast<std::size_t>(t - 1)] * weight;
  }
  return out;
}

}  // namespace gafunc

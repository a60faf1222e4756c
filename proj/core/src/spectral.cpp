#include "gafunc/spectral.hpp"

#include <algorithm>
#include <stdexcept>

namespace gafunc {

STable::STable(Polynomial<Rational> mu, int max_order) : mu_(std::move(mu)), max_order_(max_order) {
  if (mu_.degree() < 1) throw std::invalid_argument("S table needs deg(mu) >= 1");
}

Rational STable::coefficient(int j, int k, int s) const {
  if (j < 0 || k < 0 || s < 0) return 0;
  const Rational c = mu_.coeff(s + j + k + 1);
  if (j == 0 || is_zero(c)) return c;
  return c * Rational(binomial(static_cast<unsigned long>(s + j), static_cast<unsigned long>(j)));
}

Polynomial<Complex> STable::at(int j, const Complex& lambda) const {
  const int d = degree();
  std::vector<Complex> out;
  for (int k = 0; k <= d - 1 - j; ++k) {
    // Horner in lambda over s = d-1-j-k .. 0
    Complex acc(BigFloat::with_bits(lambda.bits()), BigFloat::with_bits(lambda.bits()));
    for (int s = d - 1 - j - k; s >= 0; --s) {
      acc *= lambda;
      acc += Complex(coefficient(j, k, s), lambda.digits());
    }
    out.push_back(std::move(acc));
  }
  return Polynomial<Complex>(std::move(out));
}

Polynomial<Rational> STable::at(int j, const Rational& lambda) const {
  const int d = degree();
  std::vector<Rational> out;
  for (int k = 0; k <= d - 1 - j; ++k) {
    Rational acc = 0;
    for (int s = d - 1 - j - k; s >= 0; --s) acc = acc * lambda + coefficient(j, k, s);
    out.push_back(acc);
  }
  return Polynomial<Rational>(std::move(out));
}

std::vector<Polynomial<Rational>> STable::symbolic(int j) const {
  const int d = degree();
  std::vector<Polynomial<Rational>> out;
  for (int k = 0; k <= d - 1 - j; ++k) {
    std::vector<Rational> in_lambda;
    for (int s = 0; s <= d - 1 - j - k; ++s) in_lambda.push_back(coefficient(j, k, s));
    out.emplace_back(std::move(in_lambda));
  }
  return out;
}

STable build_S_table(const Polynomial<Rational>& mu, int max_mult) {
  return STable(make_monic(mu), std::max(max_mult - 1, 0));
}

namespace {

BigFloat coefficient_scale(const Polynomial<Rational>& mu, const Complex& lambda) {
  // sum |c_i| max(1, |lambda|)^i bounds |mu^(k)(lambda)| up to binomial factors.
  const BigFloat r = std::max(abs(lambda), BigFloat(1L, lambda.digits()));
  BigFloat acc = BigFloat::with_bits(lambda.bits());
  for (int i = mu.degree(); i >= 0; --i) acc = acc * r + abs(BigFloat(mu.coeff(i), lambda.digits()));
  return acc;
}

}  // namespace

SpectralBasis build_spectral_basis(const Polynomial<Rational>& mu_in, const RootSet& roots) {
  const Polynomial<Rational> mu = make_monic(mu_in);
  if (roots.total_multiplicity() != mu.degree()) {
    throw InconsistentMultiplicity("root multiplicities sum to " + std::to_string(roots.total_multiplicity()) +
                                   " but deg(mu) = " + std::to_string(mu.degree()));
  }
  const STable table = build_S_table(mu, roots.max_multiplicity());

  // Weighted derivatives mu^(k), k = 1..deg mu.
  std::vector<Polynomial<Rational>> weighted(static_cast<std::size_t>(mu.degree()) + 1);
  for (int k = 0; k <= mu.degree(); ++k) weighted[static_cast<std::size_t>(k)] = weighted_derivative(mu, k);

  SpectralBasis basis;
  basis.mu = mu;
  basis.roots = roots;
  for (const Root& root : roots.entries) {
    const int m = root.multiplicity;
    const Complex& lambda = root.value;
    std::vector<Polynomial<Complex>> q(static_cast<std::size_t>(m));

    auto weighted_at = [&](int k) -> Complex {
      if (k > mu.degree()) return Complex(BigFloat::with_bits(lambda.bits()));
      if (root.exact) return Complex(poly_eval(weighted[static_cast<std::size_t>(k)], *root.exact), lambda.digits());
      return poly_eval(weighted[static_cast<std::size_t>(k)], lambda);
    };
    auto s_at = [&](int j) -> Polynomial<Complex> {
      if (root.exact) return to_complex(table.at(j, *root.exact), lambda.digits());
      return table.at(j, lambda);
    };

    const Complex denominator = weighted_at(m);
    const BigFloat tolerance = pow10(-lambda.digits() / 2, lambda.digits()) * coefficient_scale(mu, lambda);
    if (abs(denominator) <= tolerance) {
      throw InconsistentMultiplicity("weighted derivative mu^(" + std::to_string(m) + ") vanishes at root " +
                                     to_string(lambda, 20));
    }
    const Complex inverse = Complex(BigFloat(1L, lambda.digits())) / denominator;

    for (int j = 0; j < m; ++j) {
      Polynomial<Complex> numerator = s_at(j);
      for (int t = 1; t <= j; ++t) {
        numerator -= q[static_cast<std::size_t>(m - 1 - j + t)] * weighted_at(m + t);
      }
      q[static_cast<std::size_t>(m - 1 - j)] = numerator * inverse;
    }
    basis.q.push_back(std::move(q));
  }
  return basis;
}

PowerTable::PowerTable(std::vector<std::vector<Rational>> exact, int digits)
    : exact_(std::move(exact)), digits_(digits) {
  numeric_.reserve(exact_.size());
  for (const auto& row : exact_) {
    std::vector<BigFloat> lifted;
    lifted.reserve(row.size());
    for (const Rational& r : row) lifted.emplace_back(r, digits);
    numeric_.push_back(std::move(lifted));
  }
}

std::vector<Complex> PowerTable::evaluate(const Polynomial<Complex>& p) const {
  if (p.degree() >= count()) {
    throw std::out_of_range("power table holds " + std::to_string(count()) + " powers, polynomial needs " +
                            std::to_string(p.degree() + 1));
  }
  const long bits = digits_to_bits(digits_);
  std::vector<Complex> out(width(), Complex(BigFloat::with_bits(bits), BigFloat::with_bits(bits)));
  for (int k = 0; k <= p.degree(); ++k) {
    const Complex& c = p.coefficients()[static_cast<std::size_t>(k)];
    if (is_zero(c)) continue;
    const auto& row = numeric_[static_cast<std::size_t>(k)];
    const auto& exact_row = exact_[static_cast<std::size_t>(k)];
    for (std::size_t l = 0; l < out.size(); ++l) {
      if (!is_zero(exact_row[l])) out[l] += c * row[l];
    }
  }
  return out;
}

PowerTable mv_power_table(const Multivector<Rational>& a, int kmax, int digits) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& power : mv_powers(a, kmax)) rows.push_back(to_coefficient_list(power));
  return PowerTable(std::move(rows), digits);
}

Polynomial<Complex> decomposition_polynomial(const SpectralBasis& basis) {
  Polynomial<Complex> sum;
  for (std::size_t i = 0; i < basis.q.size(); ++i) {
    Polynomial<Complex> factor = Polynomial<Complex>::constant(basis.roots[i].value);
    if (basis.q[i].size() > 1) factor += basis.Q(i, 1);
    sum += factor * basis.Q(i, 0);
  }
  return sum;
}

Polynomial<Complex> power_polynomial(const SpectralBasis& basis, int k) {
  Polynomial<Complex> sum;
  for (std::size_t i = 0; i < basis.q.size(); ++i) {
    const Complex& lambda = basis.roots[i].value;
    const int m = static_cast<int>(basis.q[i].size());
    for (int t = 0; t < m && t <= k; ++t) {
      const Complex weight = pow(lambda, static_cast<long>(k - t)) *
                             Complex(Rational(binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(t))),
                                     lambda.digits());
      sum += basis.Q(i, t) * weight;
    }
  }
  return sum;
}

namespace {

BigFloat max_deviation(const std::vector<Complex>& value, const std::vector<Rational>& target, int digits) {
  BigFloat worst(0L, digits);
  for (std::size_t l = 0; l < value.size(); ++l) {
    worst = std::max(worst, abs(value[l] - Complex(target[l], digits)));
  }
  return worst;
}

}  // namespace

DecompositionResidual spectral_decomposition_check(const PowerTable& powers, const SpectralBasis& basis) {
  const int digits = powers.digits();
  DecompositionResidual out;
  out.first = max_deviation(powers.evaluate(decomposition_polynomial(basis)), powers.exact(1), digits);
  out.second = max_deviation(powers.evaluate(power_polynomial(basis, 2)), powers.exact(2), digits);
  return out;
}

DecompositionResidual spectral_decomposition_check(const Multivector<Rational>& a, const SpectralBasis& basis) {
  const int digits = basis.roots.entries.empty() ? kDefaultDigits : basis.roots[0].value.digits();
  const int kmax = std::max(2 * basis.mu.degree() - 2, 2);
  return spectral_decomposition_check(mv_power_table(a, kmax, digits), basis);
}

}  // namespace gafunc

#pragma once

#include <span>
#include <string>
#include <vector>

#include "gafunc/errors.hpp"
#include "gafunc/scalar.hpp"

namespace gafunc {

/// Dense univariate polynomial; coefficient i multiplies x^i. Trailing zero
/// coefficients are trimmed on construction so the leading coefficient is
/// nonzero for every nonzero polynomial.
template <class T>
class Polynomial {
 public:
  using Coefficient = T;

  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial constant(T c) { return Polynomial(std::vector<T>{std::move(c)}); }

  static Polynomial monomial(T c, int degree) {
    std::vector<T> v(static_cast<std::size_t>(degree) + 1, T(0));
    v.back() = std::move(c);
    return Polynomial(std::move(v));
  }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const T> coefficients() const { return coeffs_; }
  const T& leading() const { return coeffs_.back(); }

  /// Coefficient of x^i (zero past the degree).
  T coeff(int i) const { return i >= 0 && i <= degree() ? coeffs_[static_cast<std::size_t>(i)] : T(0); }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator*=(const T& s) {
    for (T& c : coeffs_) c *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
  friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }
  friend Polynomial operator-(Polynomial a) {
    for (T& c : a.coeffs_) c = -c;
    return a;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (gafunc::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && gafunc::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

template <class U, class T, class Convert>
Polynomial<U> map_coefficients(const Polynomial<T>& p, Convert&& convert) {
  std::vector<U> out;
  out.reserve(p.coefficients().size());
  for (const T& c : p.coefficients()) out.push_back(convert(c));
  return Polynomial<U>(std::move(out));
}

Polynomial<Complex> to_complex(const Polynomial<Rational>& p, int digits);
Polynomial<ComplexRational> to_complex_rational(const Polynomial<Rational>& p);

/// x - c
template <class T>
Polynomial<T> linear_factor(const T& root) {
  return Polynomial<T>(std::vector<T>{T(-root), T(1)});
}

template <class T>
Polynomial<T> power(Polynomial<T> base, int exponent) {
  Polynomial<T> result = Polynomial<T>::constant(T(1));
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

/// (1/k!) d^k P / dx^k; coefficient j-k of the result is binomial(j,k) * coeff_j(P).
template <class T>
Polynomial<T> weighted_derivative(const Polynomial<T>& p, int k) {
  if (k == 0) return p;
  std::vector<T> out;
  for (int j = k; j <= p.degree(); ++j) {
    out.push_back(p.coeff(j) * T(Rational(binomial(static_cast<unsigned long>(j), static_cast<unsigned long>(k)))));
  }
  return Polynomial<T>(std::move(out));
}

template <>
Polynomial<Complex> weighted_derivative(const Polynomial<Complex>& p, int k);

template <class T>
Polynomial<T> derivative(const Polynomial<T>& p) {
  return weighted_derivative(p, 1);
}

template <class T>
struct DivMod {
  Polynomial<T> quotient;
  Polynomial<T> remainder;
};

/// Exact long division over a field: a = quotient * b + remainder, deg remainder < deg b.
template <class T>
DivMod<T> poly_divmod(const Polynomial<T>& a, const Polynomial<T>& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by the zero polynomial");
  if (a.degree() < b.degree()) return {{}, a};
  std::vector<T> rem(a.coefficients().begin(), a.coefficients().end());
  std::vector<T> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1, T(0));
  const T& lead = b.leading();
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    const T& top = rem[static_cast<std::size_t>(i)];
    if (is_zero(top)) continue;
    T factor = top / lead;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= factor * b.coeff(j);
    quot[static_cast<std::size_t>(i - db)] = std::move(factor);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial<T>(std::move(quot)), Polynomial<T>(std::move(rem))};
}

/// Remainder of a numeric polynomial modulo an exact monic polynomial.
Polynomial<Complex> reduce_mod(const Polynomial<Complex>& p, const Polynomial<Rational>& monic);

template <class T>
Polynomial<T> make_monic(const Polynomial<T>& p) {
  if (p.is_zero()) return p;
  return p * (T(1) / p.leading());
}

/// Monic greatest common divisor over the rationals, computed on content-free
/// integer polynomials with a subresultant remainder sequence.
Polynomial<Rational> poly_gcd(const Polynomial<Rational>& a, const Polynomial<Rational>& b);

/// Primitive integer polynomial proportional to p, with positive leading coefficient.
std::vector<Integer> primitive_integer_form(const Polynomial<Rational>& p);

struct SquarefreeFactor {
  Polynomial<Rational> factor;  // monic, squarefree
  int multiplicity;
};

/// Yun's algorithm: p = lc(p) * prod factor_j^multiplicity_j with pairwise
/// coprime squarefree monic factors, multiplicities strictly increasing.
std::vector<SquarefreeFactor> squarefree_decomposition(const Polynomial<Rational>& p);

Complex poly_eval(const Polynomial<Rational>& p, const Complex& z);
Complex poly_eval(const Polynomial<Complex>& p, const Complex& z);
Rational poly_eval(const Polynomial<Rational>& p, const Rational& z);

/// "x^4 + 4 x^3 + 8 x^2 + 8 x + 4"
std::string to_string(const Polynomial<Rational>& p, const std::string& var = "x");
std::string to_string(const Polynomial<ComplexRational>& p, const std::string& var = "x");
std::string to_string(const Polynomial<Complex>& p, int significant_digits, const std::string& var = "x");

}  // namespace gafunc

#include "gafunc/polynomial.hpp"

#include <utility>

namespace gafunc {

Polynomial<Complex> to_complex(const Polynomial<Rational>& p, int digits) {
  return map_coefficients<Complex>(p, [digits](const Rational& c) { return Complex(c, digits); });
}

Polynomial<ComplexRational> to_complex_rational(const Polynomial<Rational>& p) {
  return map_coefficients<ComplexRational>(p, [](const Rational& c) { return ComplexRational(c); });
}

template <>
Polynomial<Complex> weighted_derivative(const Polynomial<Complex>& p, int k) {
  if (k == 0) return p;
  std::vector<Complex> out;
  for (int j = k; j <= p.degree(); ++j) {
    const Complex& c = p.coefficients()[static_cast<std::size_t>(j)];
    BigFloat weight(binomial(static_cast<unsigned long>(j), static_cast<unsigned long>(k)), c.digits());
    out.push_back(c * weight);
  }
  return Polynomial<Complex>(std::move(out));
}

Polynomial<Complex> reduce_mod(const Polynomial<Complex>& p, const Polynomial<Rational>& monic) {
  if (monic.is_zero() || monic.leading() != 1) throw std::invalid_argument("reduce_mod needs a monic modulus");
  const int dm = monic.degree();
  if (p.degree() < dm) return p;
  int digits = kMinDigits;
  for (const Complex& c : p.coefficients()) digits = std::max(digits, c.digits());
  std::vector<Complex> rem(p.coefficients().begin(), p.coefficients().end());
  std::vector<Complex> modulus;
  for (const Rational& c : monic.coefficients()) modulus.emplace_back(c, digits);
  for (int i = p.degree(); i >= dm; --i) {
    const Complex top = rem[static_cast<std::size_t>(i)];
    if (is_zero(top)) continue;
    for (int j = 0; j < dm; ++j) rem[static_cast<std::size_t>(i - dm + j)] -= top * modulus[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(dm));
  return Polynomial<Complex>(std::move(rem));
}

// ---------------------------------------------------------------------------
// Integer polynomial helpers for the gcd.

namespace {

using IntPoly = std::vector<Integer>;  // index = power, trimmed

void trim(IntPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

int degree(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }

Integer content(const IntPoly& p) {
  Integer g = 0;
  for (const Integer& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPoly primitive(IntPoly p) {
  trim(p);
  if (p.empty()) return p;
  Integer g = content(p);
  if (sgn(p.back()) < 0) g = -g;
  for (Integer& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return p;
}

/// lc(b)^(deg a - deg b + 1) * a mod b
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
  const int db = degree(b);
  const Integer& lb = b.back();
  int steps = degree(a) - db + 1;
  while (!a.empty() && degree(a) >= db) {
    const Integer top = a.back();
    const int shift = degree(a) - db;
    for (Integer& c : a) c *= lb;
    for (int j = 0; j <= db; ++j) a[static_cast<std::size_t>(shift + j)] -= top * b[static_cast<std::size_t>(j)];
    trim(a);
    --steps;
  }
  // Account for skipped steps when the degree dropped by more than one.
  for (; steps > 0; --steps) {
    for (Integer& c : a) c *= lb;
  }
  return a;
}

Integer ipow(const Integer& base, int e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

}  // namespace

std::vector<Integer> primitive_integer_form(const Polynomial<Rational>& p) {
  Integer common = 1;
  for (const Rational& c : p.coefficients()) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.get_den_mpz_t());
  IntPoly out;
  out.reserve(p.coefficients().size());
  for (const Rational& c : p.coefficients()) out.push_back(c.get_num() * (common / c.get_den()));
  return primitive(std::move(out));
}

Polynomial<Rational> poly_gcd(const Polynomial<Rational>& a, const Polynomial<Rational>& b) {
  IntPoly A = primitive_integer_form(a);
  IntPoly B = primitive_integer_form(b);
  if (A.empty() && B.empty()) return {};
  if (degree(A) < degree(B)) std::swap(A, B);
  IntPoly result;
  if (B.empty()) {
    result = A;
  } else {
    Integer g = 1;
    Integer h = 1;
    while (true) {
      const int delta = degree(A) - degree(B);
      IntPoly R = pseudo_remainder(A, B);
      if (R.empty()) {
        result = B;
        break;
      }
      if (degree(R) == 0) {
        result = IntPoly{Integer(1)};
        break;
      }
      A = std::move(B);
      const Integer divisor = g * ipow(h, delta);
      for (Integer& c : R) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
      B = std::move(R);
      g = A.back();
      if (delta > 0) {
        Integer num = ipow(g, delta);
        Integer den = ipow(h, delta - 1);
        mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      }
    }
  }
  result = primitive(std::move(result));
  std::vector<Rational> coeffs;
  for (const Integer& c : result) coeffs.emplace_back(c);
  return make_monic(Polynomial<Rational>(std::move(coeffs)));
}

std::vector<SquarefreeFactor> squarefree_decomposition(const Polynomial<Rational>& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree decomposition of the zero polynomial");
  std::vector<SquarefreeFactor> out;
  const Polynomial<Rational> f = make_monic(p);
  if (f.degree() == 0) return out;
  const Polynomial<Rational> df = derivative(f);
  const Polynomial<Rational> a0 = poly_gcd(f, df);
  Polynomial<Rational> b = poly_divmod(f, a0).quotient;
  const Polynomial<Rational> c = poly_divmod(df, a0).quotient;
  Polynomial<Rational> d = c - derivative(b);
  for (int multiplicity = 1; b.degree() > 0; ++multiplicity) {
    Polynomial<Rational> a = poly_gcd(b, d);
    Polynomial<Rational> next_b = poly_divmod(b, a).quotient;
    Polynomial<Rational> next_c = poly_divmod(d, a).quotient;
    if (a.degree() > 0) out.push_back({a, multiplicity});
    d = next_c - derivative(next_b);
    b = std::move(next_b);
  }
  return out;
}

Complex poly_eval(const Polynomial<Rational>& p, const Complex& z) {
  Complex acc(BigFloat::with_bits(z.bits()), BigFloat::with_bits(z.bits()));
  for (int i = p.degree(); i >= 0; --i) {
    acc *= z;
    acc += Complex(p.coefficients()[static_cast<std::size_t>(i)], z.digits());
  }
  return acc;
}

Complex poly_eval(const Polynomial<Complex>& p, const Complex& z) {
  Complex acc(BigFloat::with_bits(z.bits()), BigFloat::with_bits(z.bits()));
  for (int i = p.degree(); i >= 0; --i) {
    acc *= z;
    acc += p.coefficients()[static_cast<std::size_t>(i)];
  }
  return acc;
}

Rational poly_eval(const Polynomial<Rational>& p, const Rational& z) {
  Rational acc = 0;
  for (int i = p.degree(); i >= 0; --i) acc = acc * z + p.coefficients()[static_cast<std::size_t>(i)];
  return acc;
}

namespace {

std::string monomial(const std::string& var, int k) {
  if (k == 0) return "";
  if (k == 1) return var;
  return var + "^" + std::to_string(k);
}

template <class T, class Format, class Negative, class IsOne>
std::string format_poly(const Polynomial<T>& p, const std::string& var, Format&& format, Negative&& negative,
                        IsOne&& is_one) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const T& c = p.coefficients()[static_cast<std::size_t>(k)];
    if (is_zero(c)) continue;
    const bool neg = negative(c);
    const T magnitude = neg ? T(-c) : c;
    std::string term;
    if (k > 0 && is_one(magnitude)) {
      term = monomial(var, k);
    } else {
      term = format(magnitude);
      if (k > 0) term += " " + monomial(var, k);
    }
    if (out.empty()) {
      out = neg ? "-" + term : term;
    } else {
      out += neg ? " - " : " + ";
      out += term;
    }
  }
  return out;
}

}  // namespace

std::string to_string(const Polynomial<Rational>& p, const std::string& var) {
  return format_poly(
      p, var, [](const Rational& c) { return to_string(c); }, [](const Rational& c) { return sgn(c) < 0; },
      [](const Rational& c) { return c == 1; });
}

std::string to_string(const Polynomial<ComplexRational>& p, const std::string& var) {
  return format_poly(
      p, var, [](const ComplexRational& c) { return to_string(c); },
      [](const ComplexRational& c) { return is_zero(c.im) && sgn(c.re) < 0; },
      [](const ComplexRational& c) { return c == ComplexRational(1); });
}

std::string to_string(const Polynomial<Complex>& p, int significant_digits, const std::string& var) {
  return format_poly(
      p, var, [&](const Complex& c) { return to_string(c, significant_digits); },
      [](const Complex&) { return false; }, [](const Complex&) { return false; });
}

}  // namespace gafunc

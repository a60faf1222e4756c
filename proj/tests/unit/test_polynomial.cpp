#include <gtest/gtest.h>

#include "gafunc/polynomial.hpp"

using namespace gafunc;
using P = Polynomial<Rational>;

namespace {
P from_ints(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return P(v);
}
}  // namespace

TEST(Polynomial, TrimAndDegree) {
  EXPECT_EQ(from_ints({1, 2, 0, 0}).degree(), 1);
  EXPECT_EQ(P().degree(), -1);
  EXPECT_TRUE(from_ints({0, 0}).is_zero());
}

TEST(Polynomial, WeightedDerivative) {
  // mu_ex1 = x^4 + 4x^3 + 8x^2 + 8x + 4; (1/2) mu'' = 6x^2 + 12x + 8
  P mu = from_ints({4, 8, 8, 4, 1});
  EXPECT_EQ(weighted_derivative(mu, 2), from_ints({8, 12, 6}));
  EXPECT_EQ(weighted_derivative(mu, 4), from_ints({1}));
  EXPECT_TRUE(weighted_derivative(mu, 5).is_zero());
  EXPECT_EQ(derivative(mu), from_ints({8, 16, 12, 4}));
}

TEST(Polynomial, WeightedDerivativeOfMuEx2) {
  P mu = from_ints({16875, -47250, 53550, -32890, 12132, -2774, 386, -30, 1});
  EXPECT_EQ(weighted_derivative(mu, 2), from_ints({53550, -98670, 72792, -27740, 5790, -630, 28}));
  EXPECT_EQ(weighted_derivative(mu, 7), from_ints({-30, 8}));
}

TEST(Polynomial, DivMod) {
  P a = from_ints({-1, 0, 0, 1});  // x^3 - 1
  P b = from_ints({-1, 1});
  auto [q, r] = poly_divmod(a, b);
  EXPECT_EQ(q, from_ints({1, 1, 1}));
  EXPECT_TRUE(r.is_zero());
  auto [q2, r2] = poly_divmod(from_ints({1, 0, 1}), from_ints({0, 2}));
  EXPECT_EQ(q2, P({Rational(0), Rational(1, 2)}));
  EXPECT_EQ(r2, from_ints({1}));
  EXPECT_THROW(poly_divmod(a, P()), DivisionByZero);
}

TEST(Polynomial, DivModComplexRational) {
  using C = ComplexRational;
  Polynomial<C> a({C(1), C(0), C(1)});  // x^2 + 1 = (x - i)(x + i)
  Polynomial<C> b({C(Rational(0), Rational(-1)), C(1)});
  auto [q, r] = poly_divmod(a, b);
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(q, (Polynomial<C>({C(Rational(0), Rational(1)), C(1)})));
}

TEST(Polynomial, GcdAndSquarefree) {
  // (x-5)^4 (x-3)^3 (x-1)
  P mu = power(from_ints({-5, 1}), 4) * power(from_ints({-3, 1}), 3) * from_ints({-1, 1});
  EXPECT_EQ(mu, from_ints({16875, -47250, 53550, -32890, 12132, -2774, 386, -30, 1}));
  EXPECT_EQ(poly_gcd(mu, derivative(mu)), power(from_ints({-5, 1}), 3) * power(from_ints({-3, 1}), 2));
  auto sf = squarefree_decomposition(mu);
  ASSERT_EQ(sf.size(), 3u);
  EXPECT_EQ(sf[0].multiplicity, 1);
  EXPECT_EQ(sf[0].factor, from_ints({-1, 1}));
  EXPECT_EQ(sf[1].multiplicity, 3);
  EXPECT_EQ(sf[1].factor, from_ints({-3, 1}));
  EXPECT_EQ(sf[2].multiplicity, 4);
  EXPECT_EQ(sf[2].factor, from_ints({-5, 1}));
}

TEST(Polynomial, SquarefreeRationalCoefficients) {
  P p = power(P({Rational(-1, 3), Rational(1)}), 2) * from_ints({2, 2, 1});
  p = p * Rational(7, 5);
  auto sf = squarefree_decomposition(p);
  ASSERT_EQ(sf.size(), 2u);
  EXPECT_EQ(sf[0].factor, from_ints({2, 2, 1}));
  EXPECT_EQ(sf[1].factor, P({Rational(-1, 3), Rational(1)}));
  EXPECT_EQ(sf[1].multiplicity, 2);
}

TEST(Polynomial, Evaluation) {
  P mu = from_ints({4, 8, 8, 4, 1});
  Complex root(BigFloat(-1L, 50), BigFloat(-1L, 50));
  EXPECT_TRUE(is_zero(poly_eval(mu, root)));
  // Weighted second derivative at -1-i is -4.
  Complex w = poly_eval(weighted_derivative(mu, 2), root);
  EXPECT_EQ(w, Complex(-4L));
  EXPECT_EQ(poly_eval(mu, Rational(1)), Rational(25));
}

TEST(Polynomial, ReduceModMonic) {
  P mu = from_ints({2, 0, 1});  // x^2 + 2
  Polynomial<Complex> p = to_complex(from_ints({1, 1, 1, 1}), 40);  // x^3 + x^2 + x + 1
  // x^3 = -2x, x^2 = -2: remainder = -x - 1
  auto r = reduce_mod(p, mu);
  EXPECT_EQ(r, to_complex(from_ints({-1, -1}), 40));
}

TEST(Polynomial, Text) {
  EXPECT_EQ(to_string(from_ints({4, 8, 8, 4, 1})), "x^4 + 4 x^3 + 8 x^2 + 8 x + 4");
  EXPECT_EQ(to_string(from_ints({0, -1, 1})), "x^2 - x");
  EXPECT_EQ(to_string(P()), "0");
}

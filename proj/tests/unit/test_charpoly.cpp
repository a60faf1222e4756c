#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "gafunc/charpoly.hpp"
#include "gafunc/minpoly.hpp"

using namespace gafunc;

TEST(CharPoly, ScalarIsBinomialPower) {
  auto a = Multivector<Rational>::scalar(fixtures::kCl30, Rational(3, 2));
  auto cp = char_poly(a);
  EXPECT_EQ(cp.trace(), Rational(6));
  Polynomial<Rational> expected = power(Polynomial<Rational>({Rational(-3, 2), Rational(1)}), 4);
  EXPECT_EQ(cp.monic(), expected);
  EXPECT_EQ(cp.coefficients.front(), Rational(-1));
}

TEST(CharPoly, Ex1) {
  auto cp = char_poly(fixtures::ex1());
  EXPECT_EQ(cp.trace(), Rational(-4));
  EXPECT_EQ(cp.determinant(), Rational(4));
  EXPECT_EQ(cp.monic(), minimal_poly(fixtures::ex1()).mu);
  EXPECT_TRUE(cayley_hamilton_check(fixtures::ex1()));
}

TEST(Determinant, Trivial) {
  for (auto [p, q] : {std::pair{1, 0}, std::pair{2, 1}, std::pair{3, 3}}) {
    Signature s(p, q);
    EXPECT_EQ(determinant(Multivector<Rational>::scalar(s, Rational(1))), Rational(1));
    EXPECT_EQ(determinant(Multivector<Rational>(s)), Rational(0));
  }
}

TEST(CharPoly, PropertiesOnRandomInput) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> dist(-4, 4);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 5;
    const int p = trial % (n + 1);
    Signature s(p, n - p);
    std::vector<Rational> c(s.algebra_dim());
    for (auto& x : c) x = dist(rng);
    Multivector<Rational> a(s, c);
    auto cp = char_poly(a);
    EXPECT_EQ(cp.degree(), s.char_degree());
    EXPECT_EQ(cp.trace(), Rational(s.char_degree()) * scalar_part(a));
    EXPECT_TRUE(substitute(cp.chi, a).is_zero());
    // Det(A^k) = Det(A)^k
    Rational det = cp.determinant();
    Multivector<Rational> ak = a;
    for (int k = 2; k <= 3; ++k) {
      ak = ak * a;
      Rational expected = det;
      for (int j = 1; j < k; ++j) expected *= det;
      EXPECT_EQ(determinant(ak), expected);
    }
  }
}

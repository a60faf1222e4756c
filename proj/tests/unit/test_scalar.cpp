#include <gtest/gtest.h>

#include "gafunc/scalar.hpp"

using namespace gafunc;

TEST(RationalArith, CanonicalForm) {
  EXPECT_EQ(rational_arith(Rational(1, 2), Rational(1, 2), ArithOp::add), Rational(1));
  Rational half = rational_arith(make_rational(2, 4), Rational(1), ArithOp::mul);
  EXPECT_EQ(half.get_num(), 1);
  EXPECT_EQ(half.get_den(), 2);
  EXPECT_EQ(rational_arith(Rational(1, 3), Rational(1, 3), ArithOp::div), Rational(1));
  EXPECT_EQ(make_rational(3, -6), Rational(-1, 2));
}

TEST(RationalArith, DivisionByZeroThrows) {
  EXPECT_THROW(rational_arith(Rational(1), Rational(0), ArithOp::div), DivisionByZero);
  EXPECT_THROW(make_rational(1, 0), DivisionByZero);
}

TEST(ParseRational, Forms) {
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(parse_rational("-3/4"), Rational(-3, 4));
  EXPECT_EQ(parse_rational("0.125"), Rational(1, 8));
  EXPECT_EQ(parse_rational("2.5e-3"), Rational(1, 400));
  EXPECT_EQ(parse_rational(" +12 "), Rational(12));
  EXPECT_THROW(parse_rational(""), ParseError);
  EXPECT_THROW(parse_rational("1/0"), DivisionByZero);
  EXPECT_THROW(parse_rational("abc"), ParseError);
  EXPECT_THROW(parse_rational("1.2.3"), ParseError);
}

TEST(Precision, Bounds) {
  EXPECT_EQ(Precision().digits(), 50);
  EXPECT_THROW(Precision(15), std::invalid_argument);
  EXPECT_EQ(Precision(16).digits(), 16);
}

TEST(BigFloat, PrecisionFollowsWiderOperand) {
  BigFloat a(1L, 100);
  BigFloat b(3L, 20);
  BigFloat c = a / b;
  EXPECT_GE(c.digits(), 100);
  BigFloat third(Rational(1, 3), 100);
  EXPECT_LT(log10_abs(c - third), -99);
}

TEST(BigFloat, ParsesText) {
  BigFloat x("3.14159265358979323846264338327950288419716939937510", 60);
  EXPECT_LT(log10_abs(x - BigFloat::pi(60)), -49);
  EXPECT_THROW(BigFloat("", 20), ParseError);
  EXPECT_THROW(BigFloat("1.0x", 20), ParseError);
}

TEST(Complex, Transcendentals) {
  const int d = 60;
  // exp(i pi) = -1
  Complex z(BigFloat(0L, d), BigFloat::pi(d));
  Complex w = exp(z) + Complex(1L);
  EXPECT_LT(log10_abs(abs(w)), -55);
  // log(exp(z)) = z on the principal strip
  Complex u(BigFloat(Rational(1, 3), d), BigFloat(Rational(-2, 3), d));
  EXPECT_LT(log10_abs(abs(log(exp(u)) - u)), -55);
  // sin^2 + cos^2 = 1
  Complex s = sin(u), c = cos(u);
  EXPECT_LT(log10_abs(abs(s * s + c * c - Complex(1L))), -55);
  // sqrt(z)^2 = z
  Complex r = sqrt(u);
  EXPECT_LT(log10_abs(abs(r * r - u)), -55);
  EXPECT_GT(r.re().sign(), 0);
  EXPECT_THROW(log(Complex(BigFloat(0L, d))), DivisionByZero);
}

TEST(Complex, PowRational) {
  const int d = 50;
  Complex four(Rational(4), d);
  Complex two = pow(four, Rational(1, 2));
  EXPECT_LT(log10_abs(abs(two - Complex(2L))), -45);
  Complex cube = pow(Complex(Rational(3, 2), d), 3L);
  EXPECT_EQ(cube, Complex(Rational(27, 8), d));
}

TEST(Combinatorics, BinomialFactorial) {
  EXPECT_EQ(binomial(7, 3), 35);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(factorial(10), 3628800);
}

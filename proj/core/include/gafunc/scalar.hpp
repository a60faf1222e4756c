#pragma once

// Scalar rings used throughout the library:
//   Rational        exact, GMP-backed, always canonical (lowest terms, positive denominator)
//   ComplexRational exact Gaussian rationals, used only where complex exact input is needed
//   BigFloat        MPFR-backed real with per-value precision
//   Complex         pair of BigFloat sharing one precision
//
// Binary operations on BigFloat/Complex return a value whose precision is the
// larger of the operands' precisions, so mixing a low-precision constant into a
// working-precision computation never degrades the result.

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "gafunc/errors.hpp"

namespace gafunc {

using Integer = mpz_class;
using Rational = mpq_class;

inline constexpr int kDefaultDigits = 50;
inline constexpr int kMinDigits = 16;

/// Working precision in decimal digits.
class Precision {
 public:
  constexpr Precision() = default;
  explicit Precision(int digits);

  int digits() const { return digits_; }
  Precision operator+(int extra) const { return Precision(digits_ + extra); }

 private:
  int digits_ = kDefaultDigits;
};

// ---------------------------------------------------------------------------
// Rational

enum class ArithOp { add, sub, mul, div };

Rational rational_arith(const Rational& a, const Rational& b, ArithOp op);

/// num/den in lowest terms; throws DivisionByZero when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "7", "-3/4", "0.125", "2.5e-3". Decimals convert exactly.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline Rational conj(const Rational& r) { return r; }

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);

// ---------------------------------------------------------------------------
// ComplexRational

struct ComplexRational {
  Rational re;
  Rational im;

  ComplexRational() = default;
  ComplexRational(long v) : re(v), im(0) {}  // NOLINT: ring literal
  ComplexRational(Rational r) : re(std::move(r)), im(0) {}  // NOLINT
  ComplexRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  ComplexRational& operator+=(const ComplexRational& o);
  ComplexRational& operator-=(const ComplexRational& o);
  ComplexRational& operator*=(const ComplexRational& o);
  ComplexRational& operator/=(const ComplexRational& o);

  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

ComplexRational operator+(ComplexRational a, const ComplexRational& b);
ComplexRational operator-(ComplexRational a, const ComplexRational& b);
ComplexRational operator*(ComplexRational a, const ComplexRational& b);
ComplexRational operator/(ComplexRational a, const ComplexRational& b);
ComplexRational operator-(const ComplexRational& a);
inline bool is_zero(const ComplexRational& z) { return is_zero(z.re) && is_zero(z.im); }
inline ComplexRational conj(const ComplexRational& z) { return {z.re, -z.im}; }
std::string to_string(const ComplexRational& z);

// ---------------------------------------------------------------------------
// BigFloat

int digits_to_bits(int digits);
int bits_to_digits(long bits);

class BigFloat {
 public:
  /// Zero at 64 bits.
  BigFloat();
  /// Exact: every long fits in 64 bits.
  BigFloat(long v);  // NOLINT: ring literal
  BigFloat(long v, int digits);
  BigFloat(double v, int digits);
  BigFloat(const Rational& r, int digits);
  BigFloat(const Integer& z, int digits);
  /// Decimal text at the given precision; throws ParseError.
  BigFloat(std::string_view text, int digits);

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  static BigFloat with_bits(long bits);
  static BigFloat pi(int digits);

  long bits() const { return mpfr_get_prec(value_); }
  int digits() const { return bits_to_digits(bits()); }

  mpfr_ptr raw() { return value_; }
  mpfr_srcptr raw() const { return value_; }

  /// Raises the precision in place (exact); never lowers it.
  void promote(long bits);

  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);

  int sign() const { return mpfr_sgn(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Scientific notation with the given number of significant digits.
  std::string to_string(int significant_digits) const;
  std::string to_string() const { return to_string(digits()); }

  friend int compare(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.value_, b.value_); }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return compare(a, b) == 0; }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return compare(a, b) < 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return compare(a, b) > 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return compare(a, b) <= 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return compare(a, b) >= 0; }

 private:
  mpfr_t value_;
};

BigFloat operator+(const BigFloat& a, const BigFloat& b);
BigFloat operator-(const BigFloat& a, const BigFloat& b);
BigFloat operator*(const BigFloat& a, const BigFloat& b);
BigFloat operator/(const BigFloat& a, const BigFloat& b);
BigFloat operator-(const BigFloat& a);

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat sinh(const BigFloat& x);
BigFloat cosh(const BigFloat& x);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
BigFloat hypot(const BigFloat& a, const BigFloat& b);
/// 10^e at the given precision.
BigFloat pow10(long e, int digits);
/// log10|x|, -inf for zero (as double; used for reporting and tolerances).
double log10_abs(const BigFloat& x);

inline bool is_zero(const BigFloat& x) { return mpfr_zero_p(x.raw()) != 0; }
inline BigFloat conj(const BigFloat& x) { return x; }

// ---------------------------------------------------------------------------
// Complex

class Complex {
 public:
  Complex() = default;
  Complex(long v) : re_(v), im_(0L) {}  // NOLINT: ring literal
  Complex(BigFloat re) : re_(std::move(re)), im_(BigFloat::with_bits(re_.bits())) {}  // NOLINT
  Complex(BigFloat re, BigFloat im);
  Complex(const Rational& re, int digits) : re_(re, digits), im_(0L, digits) {}
  Complex(const ComplexRational& z, int digits) : re_(z.re, digits), im_(z.im, digits) {}

  const BigFloat& re() const { return re_; }
  const BigFloat& im() const { return im_; }
  long bits() const { return re_.bits(); }
  int digits() const { return re_.digits(); }
  void promote(long bits);

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);

  friend bool operator==(const Complex& a, const Complex& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

 private:
  BigFloat re_;
  BigFloat im_;
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Complex operator-(const Complex& a);
Complex operator*(const Complex& a, const BigFloat& s);

inline bool is_zero(const Complex& z) { return is_zero(z.re()) && is_zero(z.im()); }
Complex conj(const Complex& z);
BigFloat abs(const Complex& z);
BigFloat arg(const Complex& z);
Complex exp(const Complex& z);
/// Principal branch; throws DivisionByZero for log(0).
Complex log(const Complex& z);
Complex sin(const Complex& z);
Complex cos(const Complex& z);
/// Principal square root.
Complex sqrt(const Complex& z);
/// z^n by repeated squaring (exact in the ring sense, defined at 0).
Complex pow(const Complex& z, long n);
/// Principal z^alpha = exp(alpha log z); integral alpha dispatches to pow(z, long).
Complex pow(const Complex& z, const Rational& alpha);

/// Largest of |re|, |im| as a double-free BigFloat (used for residual norms).
BigFloat max_abs_part(const Complex& z);

std::string to_string(const Complex& z, int significant_digits);
std::string to_string(const Complex& z);

}  // namespace gafunc

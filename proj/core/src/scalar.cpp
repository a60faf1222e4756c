#include "gafunc/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

namespace gafunc {

Precision::Precision(int digits) : digits_(digits) {
  if (digits < kMinDigits) {
    throw std::invalid_argument("precision must be at least " + std::to_string(kMinDigits) +
                                " digits, got " + std::to_string(digits));
  }
}

// ---------------------------------------------------------------------------
// Rational

Rational rational_arith(const Rational& a, const Rational& b, ArithOp op) {
  switch (op) {
    case ArithOp::add:
      return a + b;
    case ArithOp::sub:
      return a - b;
    case ArithOp::mul:
      return a * b;
    case ArithOp::div:
      if (is_zero(b)) throw DivisionByZero("rational division by zero");
      return a / b;
  }
  throw std::logic_error("unknown arithmetic op");
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw DivisionByZero("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

Integer pow10_int(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto fail = [&] { return ParseError("invalid rational number '" + std::string(text) + "'"); };
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw fail();

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw fail();
    Integer n(std::string(num), 10), d(std::string(den), 10);
    Rational r = make_rational(n, d);
    return negative ? Rational(-r) : r;
  }

  // decimal with optional exponent
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    auto exp_text = s.substr(e + 1);
    bool exp_neg = false;
    if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
      exp_neg = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (!all_digits(exp_text) || exp_text.size() > 6) throw fail();
    exponent = std::stol(std::string(exp_text));
    if (exp_neg) exponent = -exponent;
    s = s.substr(0, e);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty())) {
      throw fail();
    }
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<long>(frac.size());
  } else {
    if (!all_digits(s)) throw fail();
    digits = std::string(s);
  }
  Rational r{Integer(digits, 10)};
  if (exponent > 0) r *= pow10_int(static_cast<unsigned long>(exponent));
  if (exponent < 0) r /= pow10_int(static_cast<unsigned long>(-exponent));
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// ---------------------------------------------------------------------------
// ComplexRational

ComplexRational& ComplexRational::operator+=(const ComplexRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

ComplexRational& ComplexRational::operator-=(const ComplexRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

ComplexRational& ComplexRational::operator*=(const ComplexRational& o) {
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

ComplexRational& ComplexRational::operator/=(const ComplexRational& o) {
  Rational den = o.re * o.re + o.im * o.im;
  if (is_zero(den)) throw DivisionByZero("complex rational division by zero");
  Rational r = (re * o.re + im * o.im) / den;
  Rational i = (im * o.re - re * o.im) / den;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
ComplexRational operator*(ComplexRational a, const ComplexRational& b) { return a *= b; }
ComplexRational operator/(ComplexRational a, const ComplexRational& b) { return a /= b; }
ComplexRational operator-(const ComplexRational& a) { return {-a.re, -a.im}; }

std::string to_string(const ComplexRational& z) {
  if (is_zero(z.im)) return to_string(z.re);
  std::string im_part = (sgn(z.im) < 0 ? "-" : "+") + to_string(Rational(abs(z.im))) + "i";
  if (is_zero(z.re)) return sgn(z.im) < 0 ? im_part : im_part.substr(1);
  return "(" + to_string(z.re) + im_part + ")";
}

// ---------------------------------------------------------------------------
// BigFloat

namespace {
constexpr double kLog2Of10 = 3.32192809488736234787;
constexpr long kIntBits = 64;
}  // namespace

int digits_to_bits(int digits) { return static_cast<int>(std::ceil(digits * kLog2Of10)) + 4; }

int bits_to_digits(long bits) { return static_cast<int>(std::floor((bits - 4) / kLog2Of10)); }

BigFloat::BigFloat() {
  mpfr_init2(value_, kIntBits);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long v) {
  mpfr_init2(value_, kIntBits);
  mpfr_set_si(value_, v, MPFR_RNDN);
}

BigFloat::BigFloat(long v, int digits) {
  mpfr_init2(value_, std::max<long>(digits_to_bits(digits), kIntBits));
  mpfr_set_si(value_, v, MPFR_RNDN);
}

BigFloat::BigFloat(double v, int digits) {
  mpfr_init2(value_, std::max<long>(digits_to_bits(digits), 53));
  mpfr_set_d(value_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& r, int digits) {
  mpfr_init2(value_, digits_to_bits(digits));
  mpfr_set_q(value_, r.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const Integer& z, int digits) {
  mpfr_init2(value_, digits_to_bits(digits));
  mpfr_set_z(value_, z.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(std::string_view text, int digits) {
  mpfr_init2(value_, digits_to_bits(digits));
  std::string s(text);
  char* end = nullptr;
  if (!s.empty()) mpfr_strtofr(value_, s.c_str(), &end, 10, MPFR_RNDN);
  if (s.empty() || end == s.c_str() || *end != '\0') {
    mpfr_clear(value_);
    throw ParseError("invalid decimal number '" + s + "'");
  }
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.bits());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.bits());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::with_bits(long bits) {
  BigFloat r;
  mpfr_set_prec(r.value_, std::max<long>(bits, MPFR_PREC_MIN));
  mpfr_set_zero(r.value_, 1);
  return r;
}

BigFloat BigFloat::pi(int digits) {
  BigFloat r = with_bits(digits_to_bits(digits));
  mpfr_const_pi(r.value_, MPFR_RNDN);
  return r;
}

void BigFloat::promote(long bits) {
  if (bits > this->bits()) mpfr_prec_round(value_, bits, MPFR_RNDN);
}

namespace {

using Binary = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
using Unary = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

BigFloat apply(Binary op, const BigFloat& a, const BigFloat& b) {
  BigFloat r = BigFloat::with_bits(std::max(a.bits(), b.bits()));
  op(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

BigFloat apply(Unary op, const BigFloat& a) {
  BigFloat r = BigFloat::with_bits(a.bits());
  op(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

void apply_in_place(Binary op, BigFloat& a, const BigFloat& b) {
  a.promote(b.bits());
  op(a.raw(), a.raw(), b.raw(), MPFR_RNDN);
}

}  // namespace

BigFloat& BigFloat::operator+=(const BigFloat& o) {
  apply_in_place(mpfr_add, *this, o);
  return *this;
}
BigFloat& BigFloat::operator-=(const BigFloat& o) {
  apply_in_place(mpfr_sub, *this, o);
  return *this;
}
BigFloat& BigFloat::operator*=(const BigFloat& o) {
  apply_in_place(mpfr_mul, *this, o);
  return *this;
}
BigFloat& BigFloat::operator/=(const BigFloat& o) {
  if (is_zero(o)) throw DivisionByZero("BigFloat division by zero");
  apply_in_place(mpfr_div, *this, o);
  return *this;
}

std::string BigFloat::to_string(int significant_digits) const {
  significant_digits = std::max(significant_digits, 1);
  char* buffer = nullptr;
  mpfr_asprintf(&buffer, "%.*Re", significant_digits - 1, value_);
  std::string s(buffer);
  mpfr_free_str(buffer);
  return s;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) { return apply(mpfr_add, a, b); }
BigFloat operator-(const BigFloat& a, const BigFloat& b) { return apply(mpfr_sub, a, b); }
BigFloat operator*(const BigFloat& a, const BigFloat& b) { return apply(mpfr_mul, a, b); }
BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  if (is_zero(b)) throw DivisionByZero("BigFloat division by zero");
  return apply(mpfr_div, a, b);
}
BigFloat operator-(const BigFloat& a) { return apply(mpfr_neg, a); }

BigFloat abs(const BigFloat& x) { return apply(mpfr_abs, x); }
BigFloat sqrt(const BigFloat& x) { return apply(mpfr_sqrt, x); }
BigFloat exp(const BigFloat& x) { return apply(mpfr_exp, x); }
BigFloat log(const BigFloat& x) { return apply(mpfr_log, x); }
BigFloat sin(const BigFloat& x) { return apply(mpfr_sin, x); }
BigFloat cos(const BigFloat& x) { return apply(mpfr_cos, x); }
BigFloat sinh(const BigFloat& x) { return apply(mpfr_sinh, x); }
BigFloat cosh(const BigFloat& x) { return apply(mpfr_cosh, x); }
BigFloat atan2(const BigFloat& y, const BigFloat& x) { return apply(mpfr_atan2, y, x); }
BigFloat hypot(const BigFloat& a, const BigFloat& b) { return apply(mpfr_hypot, a, b); }

BigFloat pow10(long e, int digits) {
  BigFloat r = BigFloat::with_bits(digits_to_bits(digits));
  mpfr_ui_pow_ui(r.raw(), 10, static_cast<unsigned long>(e < 0 ? -e : e), MPFR_RNDN);
  if (e < 0) mpfr_ui_div(r.raw(), 1, r.raw(), MPFR_RNDN);
  return r;
}

double log10_abs(const BigFloat& x) {
  if (is_zero(x)) return -std::numeric_limits<double>::infinity();
  BigFloat a = abs(x);
  mpfr_log10(a.raw(), a.raw(), MPFR_RNDN);
  return a.to_double();
}

// ---------------------------------------------------------------------------
// Complex

Complex::Complex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {
  long bits = std::max(re_.bits(), im_.bits());
  re_.promote(bits);
  im_.promote(bits);
}

void Complex::promote(long bits) {
  re_.promote(bits);
  im_.promote(bits);
}

Complex& Complex::operator+=(const Complex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  *this = *this * o;
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  *this = *this / o;
  return *this;
}

Complex operator+(const Complex& a, const Complex& b) { return {a.re() + b.re(), a.im() + b.im()}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re() - b.re(), a.im() - b.im()}; }

Complex operator*(const Complex& a, const Complex& b) {
  if (is_zero(a.im()) && is_zero(b.im())) {
    BigFloat re = a.re() * b.re();
    return {re, BigFloat::with_bits(re.bits())};
  }
  return {a.re() * b.re() - a.im() * b.im(), a.re() * b.im() + a.im() * b.re()};
}

Complex operator/(const Complex& a, const Complex& b) {
  if (is_zero(b)) throw DivisionByZero("complex division by zero");
  if (is_zero(b.im())) return {a.re() / b.re(), a.im() / b.re()};
  BigFloat den = b.re() * b.re() + b.im() * b.im();
  return {(a.re() * b.re() + a.im() * b.im()) / den, (a.im() * b.re() - a.re() * b.im()) / den};
}

Complex operator-(const Complex& a) { return {-a.re(), -a.im()}; }

Complex operator*(const Complex& a, const BigFloat& s) { return {a.re() * s, a.im() * s}; }

Complex conj(const Complex& z) { return {z.re(), -z.im()}; }
BigFloat abs(const Complex& z) { return hypot(z.re(), z.im()); }
BigFloat arg(const Complex& z) { return atan2(z.im(), z.re()); }

Complex exp(const Complex& z) {
  BigFloat m = exp(z.re());
  if (is_zero(z.im())) return {m, BigFloat::with_bits(m.bits())};
  return {m * cos(z.im()), m * sin(z.im())};
}

Complex log(const Complex& z) {
  if (is_zero(z)) throw DivisionByZero("logarithm of zero");
  return {log(abs(z)), arg(z)};
}

Complex sin(const Complex& z) {
  if (is_zero(z.im())) {
    BigFloat s = sin(z.re());
    return {s, BigFloat::with_bits(s.bits())};
  }
  return {sin(z.re()) * cosh(z.im()), cos(z.re()) * sinh(z.im())};
}

Complex cos(const Complex& z) {
  if (is_zero(z.im())) {
    BigFloat c = cos(z.re());
    return {c, BigFloat::with_bits(c.bits())};
  }
  return {cos(z.re()) * cosh(z.im()), -(sin(z.re()) * sinh(z.im()))};
}

Complex sqrt(const Complex& z) {
  const long bits = z.bits();
  if (is_zero(z)) return {BigFloat::with_bits(bits), BigFloat::with_bits(bits)};
  BigFloat two(2L);
  BigFloat t = sqrt((abs(z) + abs(z.re())) / two);
  if (z.re().sign() >= 0) return {t, z.im() / (two * t)};
  BigFloat im = z.im().sign() < 0 ? -t : t;
  return {abs(z.im()) / (two * t), im};
}

Complex pow(const Complex& z, long n) {
  if (n < 0) return Complex(1L) / pow(z, -n);
  Complex result(BigFloat(1L, z.digits()));
  Complex base = z;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

Complex pow(const Complex& z, const Rational& alpha) {
  if (alpha.get_den() == 1 && alpha.get_num().fits_slong_p()) return pow(z, alpha.get_num().get_si());
  if (is_zero(z)) {
    if (sgn(alpha) > 0) return {BigFloat::with_bits(z.bits()), BigFloat::with_bits(z.bits())};
    throw DivisionByZero("zero raised to a negative power");
  }
  return exp(log(z) * BigFloat(alpha, z.digits()));
}

BigFloat max_abs_part(const Complex& z) {
  BigFloat a = abs(z.re());
  BigFloat b = abs(z.im());
  return a < b ? b : a;
}

std::string to_string(const Complex& z, int significant_digits) {
  if (is_zero(z.im())) return z.re().to_string(significant_digits);
  std::string im = z.im().to_string(significant_digits);
  if (im.front() != '-') im = "+" + im;
  return "(" + z.re().to_string(significant_digits) + im + "i)";
}

std::string to_string(const Complex& z) { return to_string(z, z.digits()); }

}  // namespace gafunc

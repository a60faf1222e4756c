#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gafunc/errors.hpp"
#include "gafunc/scalar.hpp"

namespace gafunc {

inline constexpr int kMaxGenerators = 16;

/// Cl(p,q): the first p generators square to +1, the remaining q to -1.
class Signature {
 public:
  Signature(int p, int q);

  int p() const { return p_; }
  int q() const { return q_; }
  int n() const { return p_ + q_; }
  std::size_t algebra_dim() const { return std::size_t{1} << n(); }
  /// Degree of the characteristic polynomial, 2^ceil(n/2).
  int char_degree() const { return 1 << ((n() + 1) / 2); }
  /// Square of generator e_{i+1} (zero-based i).
  int square(int i) const { return i < p_ ? 1 : -1; }

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  int p_;
  int q_;
};

std::string to_string(const Signature& sig);

using BladeMask = std::uint32_t;

/// Basis blade e_J; bit i of the mask is set iff generator e_{i+1} occurs.
struct Blade {
  BladeMask mask = 0;
  int grade() const { return std::popcount(mask); }
  friend bool operator==(const Blade&, const Blade&) = default;
};

/// All 2^n blades in inverse degree lexicographic order: grade first, then
/// lexicographic order of the ascending index tuple. Position = coefficient index.
const std::vector<Blade>& blade_order(const Signature& sig);

/// Coefficient index of a blade in blade_order.
std::size_t blade_index(const Signature& sig, BladeMask mask);

/// "1", "e1", "e123"; indices are joined with '_' when n > 9 ("e1_10").
std::string blade_name(BladeMask mask, int n);

/// Sign (+1/-1) of e_a e_b = sign * e_{a xor b}: transposition parity of the
/// reordering times one metric factor per shared generator.
int blade_product_sign(const Signature& sig, BladeMask a, BladeMask b);

namespace detail {

/// Product of the blades at positions i and j: sign and result position.
struct ProductEntry {
  std::int8_t sign;
  std::uint32_t index;
};

class ProductTable {
 public:
  explicit ProductTable(const Signature& sig);
  ProductEntry operator()(std::size_t i, std::size_t j) const;

 private:
  Signature sig_;
  std::size_t dim_;
  const std::vector<Blade>* order_;
  const std::vector<std::uint32_t>* index_;
  const std::vector<ProductEntry>* table_;  // null for n > 8
};

}  // namespace detail

template <class T>
class Multivector {
 public:
  using Scalar = T;

  explicit Multivector(Signature sig) : sig_(sig), coeffs_(sig.algebra_dim(), T(0)) {}

  Multivector(Signature sig, std::vector<T> coeffs) : sig_(sig), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != sig_.algebra_dim()) {
      throw std::invalid_argument("multivector needs " + std::to_string(sig_.algebra_dim()) +
                                  " coefficients, got " + std::to_string(coeffs_.size()));
    }
  }

  static Multivector scalar(Signature sig, T value) {
    Multivector m(sig);
    m.coeffs_[0] = std::move(value);
    return m;
  }

  static Multivector basis_blade(Signature sig, BladeMask mask, T coeff = T(1)) {
    Multivector m(sig);
    m.coeffs_[blade_index(sig, mask)] = std::move(coeff);
    return m;
  }

  const Signature& signature() const { return sig_; }
  std::size_t size() const { return coeffs_.size(); }
  const T& operator[](std::size_t i) const { return coeffs_[i]; }
  const T& coeff(BladeMask mask) const { return coeffs_[blade_index(sig_, mask)]; }
  std::span<const T> coefficients() const { return coeffs_; }

  bool is_zero() const {
    for (const T& c : coeffs_) {
      if (!gafunc::is_zero(c)) return false;
    }
    return true;
  }

  Multivector& operator+=(const Multivector& o) {
    check_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }

  Multivector& operator-=(const Multivector& o) {
    check_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }

  Multivector& operator*=(const T& s) {
    for (T& c : coeffs_) c *= s;
    return *this;
  }

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Multivector a, const T& s) { return a *= s; }
  friend Multivector operator*(const T& s, Multivector a) { return a *= s; }
  friend Multivector operator-(Multivector a) {
    for (T& c : a.coeffs_) c = -c;
    return a;
  }

  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.sig_ == b.sig_ && a.coeffs_ == b.coeffs_;
  }

  void check_same(const Multivector& o) const {
    if (!(sig_ == o.sig_)) {
      throw SignatureMismatch("multivectors from " + to_string(sig_) + " and " + to_string(o.sig_));
    }
  }

 private:
  Signature sig_;
  std::vector<T> coeffs_;
};

template <class T>
Multivector<T> geometric_product(const Multivector<T>& a, const Multivector<T>& b) {
  a.check_same(b);
  const Signature& sig = a.signature();
  const detail::ProductTable table(sig);
  const std::size_t dim = sig.algebra_dim();
  std::vector<T> out(dim, T(0));
  for (std::size_t i = 0; i < dim; ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (is_zero(b[j])) continue;
      const detail::ProductEntry e = table(i, j);
      if (e.sign > 0) {
        out[e.index] += a[i] * b[j];
      } else {
        out[e.index] -= a[i] * b[j];
      }
    }
  }
  return Multivector<T>(sig, std::move(out));
}

template <class T>
Multivector<T> operator*(const Multivector<T>& a, const Multivector<T>& b) {
  return geometric_product(a, b);
}

template <class T>
const T& scalar_part(const Multivector<T>& a) {
  return a[0];
}

template <class T>
std::vector<T> to_coefficient_list(const Multivector<T>& a) {
  return {a.coefficients().begin(), a.coefficients().end()};
}

/// [A^0 = 1, A^1, ..., A^kmax] by repeated geometric product.
template <class T>
std::vector<Multivector<T>> mv_powers(const Multivector<T>& a, int kmax) {
  std::vector<Multivector<T>> powers;
  powers.reserve(static_cast<std::size_t>(kmax) + 1);
  powers.push_back(Multivector<T>::scalar(a.signature(), T(1)));
  for (int k = 1; k <= kmax; ++k) powers.push_back(geometric_product(a, powers.back()));
  return powers;
}

/// Coefficient-wise ring change.
template <class U, class T, class Convert>
Multivector<U> map_coefficients(const Multivector<T>& a, Convert&& convert) {
  std::vector<U> out;
  out.reserve(a.size());
  for (const T& c : a.coefficients()) out.push_back(convert(c));
  return Multivector<U>(a.signature(), std::move(out));
}

Multivector<Complex> lift_to_complex(const Multivector<Rational>& a, int digits);
Multivector<BigFloat> lift_to_real(const Multivector<Rational>& a, int digits);
Multivector<Complex> lift_to_complex(const Multivector<BigFloat>& a);

/// Largest |re| or |im| over all coefficients.
BigFloat max_abs_coefficient(const Multivector<Complex>& a);
BigFloat max_abs_coefficient(const Multivector<BigFloat>& a);

}  // namespace gafunc

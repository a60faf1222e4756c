#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gafunc/charpoly.hpp"
#include "gafunc/function.hpp"
#include "gafunc/minpoly.hpp"
#include "gafunc/multivector.hpp"

namespace gafunc {

/// Dense square matrix, row-major.
template <class T>
class Matrix {
 public:
  explicit Matrix(std::size_t dim) : dim_(dim), entries_(dim * dim, T(0)) {
    if (dim == 0) throw std::invalid_argument("matrix dimension must be >= 1");
  }

  Matrix(std::size_t dim, std::vector<T> row_major) : dim_(dim), entries_(std::move(row_major)) {
    if (dim == 0) throw std::invalid_argument("matrix dimension must be >= 1");
    if (entries_.size() != dim * dim) throw std::invalid_argument("matrix needs dim^2 entries");
  }

  static Matrix identity(std::size_t dim) {
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t dim() const { return dim_; }
  T& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  const std::vector<T>& flattened() const { return entries_; }

  bool is_zero() const {
    for (const T& c : entries_) {
      if (!gafunc::is_zero(c)) return false;
    }
    return true;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (T& c : entries_) c *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator-(Matrix a) {
    for (T& c : a.entries_) c = -c;
    return a;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    a.check_same(b);
    const std::size_t n = a.dim_;
    Matrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        const T& aik = a(i, k);
        if (gafunc::is_zero(aik)) continue;
        for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
      }
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) { return a.dim_ == b.dim_ && a.entries_ == b.entries_; }

  T trace() const {
    T acc(0);
    for (std::size_t i = 0; i < dim_; ++i) acc += (*this)(i, i);
    return acc;
  }

 private:
  void check_same(const Matrix& o) const {
    if (o.dim_ != dim_) throw std::invalid_argument("matrix dimensions differ");
  }

  std::size_t dim_;
  std::vector<T> entries_;
};

using ExactMatrix = Matrix<Rational>;

/// Minimal polynomial by the same incremental dependency search as for
/// multivectors, over the flattened powers M, M^2, ...
MinPolyResult matrix_minimal_poly(const ExactMatrix& m);
BasicMinPoly<ComplexRational> matrix_minimal_poly(const Matrix<ComplexRational>& m);

/// Monic characteristic polynomial det(x I - M) by the Faddeev-LeVerrier recursion.
Polynomial<Rational> matrix_char_poly(const ExactMatrix& m);

struct MatrixFunctionResult {
  Matrix<Complex> value;
  std::optional<Matrix<BigFloat>> real_form;
  BigFloat max_imag_residual;
  FunctionDiagnostics diagnostics;
};

/// f(M) through the generalized spectral basis of M; same assembly as mv_function.
MatrixFunctionResult matrix_function(const ExactMatrix& m, const FunctionSpec& f, Precision precision = {},
                                     Method method = Method::recursive);

PowerTable matrix_power_table(const ExactMatrix& m, int kmax, int digits);

/// Generators e1..e6 of the real 8x8 representation of Cl(4,2).
const std::array<ExactMatrix, 6>& cl42_generators();

/// Linear extension of the generator assignment. Throws SignatureMismatch
/// unless a lives in Cl(4,2).
ExactMatrix rep_of(const Multivector<Rational>& a);

/// 2x2 complex representation of the spinor c1/2 (1+e1) + c3/2 (e2-e12) +
/// c2/2 (e123+e23) + c4/2 (e13-e3): [[c1 + i c2, 0], [c3 - i c4, 0]].
Matrix<ComplexRational> spinor_matrix(const Rational& c1, const Rational& c2, const Rational& c3,
                                      const Rational& c4);

/// Rows separated by newlines or ';', entries by whitespace or ','. Entries
/// are rationals. Throws ParseError unless the result is square and non-empty.
ExactMatrix parse_matrix(std::string_view text);

std::string format_matrix(const ExactMatrix& m);
std::string format_matrix(const Matrix<BigFloat>& m, int significant_digits);
std::string format_matrix(const Matrix<Complex>& m, int significant_digits);

}  // namespace gafunc

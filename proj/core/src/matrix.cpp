#include "gafunc/matrix.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace gafunc {

namespace {

template <class T>
BasicMinPoly<T> minimal_poly_of(const Matrix<T>& m) {
  Matrix<T> last = Matrix<T>::identity(m.dim());
  auto power_vector = [&](int k) {
    if (k > 0) last = m * last;
    return last.flattened();
  };
  return detail::minimal_poly_from_powers<T>(power_vector, static_cast<int>(m.dim()));
}

}  // namespace

MinPolyResult matrix_minimal_poly(const ExactMatrix& m) { return minimal_poly_of(m); }

BasicMinPoly<ComplexRational> matrix_minimal_poly(const Matrix<ComplexRational>& m) { return minimal_poly_of(m); }

Polynomial<Rational> matrix_char_poly(const ExactMatrix& m) {
  // M_1 = M, c_k = tr(M_k) / k, M_(k+1) = M (M_k - c_k I); chi = x^n - c_1 x^(n-1) - ... - c_n
  const std::size_t n = m.dim();
  std::vector<Rational> coeffs(n + 1);
  coeffs[n] = 1;
  ExactMatrix current = m;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational c = current.trace() / Rational(static_cast<long>(k));
    coeffs[n - k] = -c;
    current = m * (current - ExactMatrix::identity(n) * c);
  }
  if (!current.is_zero()) throw std::logic_error("Faddeev-LeVerrier recursion did not terminate");
  return Polynomial<Rational>(std::move(coeffs));
}

PowerTable matrix_power_table(const ExactMatrix& m, int kmax, int digits) {
  std::vector<std::vector<Rational>> rows;
  ExactMatrix current = ExactMatrix::identity(m.dim());
  for (int k = 0; k <= kmax; ++k) {
    if (k > 0) current = m * current;
    rows.push_back(current.flattened());
  }
  return PowerTable(std::move(rows), digits);
}

MatrixFunctionResult matrix_function(const ExactMatrix& m, const FunctionSpec& f, Precision precision,
                                     Method method) {
  const int working = precision.digits() + kGuardDigits;
  const Polynomial<Rational> annihilator =
      method == Method::charpoly ? matrix_char_poly(m) : matrix_minimal_poly(m).mu;
  auto data = prepare_spectral_data(annihilator, matrix_power_table(m, annihilator.degree() - 1, working), working,
                                    method);

  int max_order = -1;
  const Polynomial<Complex> g = function_polynomial(data->basis, f, &max_order);
  MatrixFunctionResult result{Matrix<Complex>(m.dim(), data->powers.evaluate(g)), std::nullopt,
                              BigFloat::with_bits(digits_to_bits(working)), {}};

  FunctionDiagnostics& diag = result.diagnostics;
  diag.method = method;
  diag.requested_digits = precision.digits();
  diag.working_digits = working;
  diag.annihilator = data->annihilator;
  diag.roots = data->basis.roots;
  diag.max_derivative_order = max_order;

  BigFloat max_re = BigFloat::with_bits(digits_to_bits(working));
  for (const Complex& c : result.value.flattened()) {
    result.max_imag_residual = std::max(result.max_imag_residual, abs(c.im()));
    max_re = std::max(max_re, abs(c.re()));
  }
  if (result.max_imag_residual < realness_tolerance(precision.digits()) * (BigFloat(1L) + max_re)) {
    std::vector<BigFloat> re;
    for (const Complex& c : result.value.flattened()) re.push_back(c.re());
    result.real_form = Matrix<BigFloat>(m.dim(), std::move(re));
  } else if (f.real_symmetric()) {
    throw RealnessFailure("imaginary residual " + result.max_imag_residual.to_string(6) +
                              " exceeds the realness tolerance",
                          log10_abs(result.max_imag_residual));
  }
  return result;
}

const std::array<ExactMatrix, 6>& cl42_generators() {
  static const std::array<ExactMatrix, 6> generators = [] {
    // (row, column, value), 1-based
    using Entries = std::vector<std::array<int, 3>>;
    const std::array<Entries, 6> table{{
        {{1, 2, 1}, {2, 1, 1}, {3, 4, -1}, {4, 3, -1}, {5, 6, 1}, {6, 5, 1}, {7, 8, -1}, {8, 7, -1}},
        {{1, 8, -1}, {2, 7, -1}, {3, 6, -1}, {4, 5, -1}, {5, 4, -1}, {6, 3, -1}, {7, 2, -1}, {8, 1, -1}},
        {{1, 4, -1}, {2, 3, -1}, {3, 2, -1}, {4, 1, -1}, {5, 8, 1}, {6, 7, 1}, {7, 6, 1}, {8, 5, 1}},
        {{1, 1, 1}, {2, 2, -1}, {3, 3, 1}, {4, 4, -1}, {5, 5, 1}, {6, 6, -1}, {7, 7, 1}, {8, 8, -1}},
        {{1, 4, 1}, {2, 3, 1}, {3, 2, -1}, {4, 1, -1}, {5, 8, 1}, {6, 7, 1}, {7, 6, -1}, {8, 5, -1}},
        {{1, 2, 1}, {2, 1, -1}, {3, 4, 1}, {4, 3, -1}, {5, 6, 1}, {6, 5, -1}, {7, 8, 1}, {8, 7, -1}},
    }};
    std::array<ExactMatrix, 6> out{ExactMatrix(8), ExactMatrix(8), ExactMatrix(8),
                                   ExactMatrix(8), ExactMatrix(8), ExactMatrix(8)};
    for (std::size_t g = 0; g < 6; ++g) {
      for (const auto& [r, c, v] : table[g]) out[g](static_cast<std::size_t>(r - 1), static_cast<std::size_t>(c - 1)) = v;
    }
    return out;
  }();
  return generators;
}

ExactMatrix rep_of(const Multivector<Rational>& a) {
  static const Signature cl42(4, 2);
  if (!(a.signature() == cl42)) {
    throw SignatureMismatch("the matrix representation is defined for Cl(4,2), got " + to_string(a.signature()));
  }
  static const std::vector<ExactMatrix> blade_matrices = [] {
    std::vector<ExactMatrix> out;
    for (const Blade& b : blade_order(cl42)) {
      ExactMatrix m = ExactMatrix::identity(8);
      for (int i = 0; i < 6; ++i) {
        if (b.mask & (1u << i)) m = m * cl42_generators()[static_cast<std::size_t>(i)];
      }
      out.push_back(std::move(m));
    }
    return out;
  }();
  ExactMatrix out(8);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!is_zero(a[i])) out += blade_matrices[i] * a[i];
  }
  return out;
}

Matrix<ComplexRational> spinor_matrix(const Rational& c1, const Rational& c2, const Rational& c3,
                                      const Rational& c4) {
  Matrix<ComplexRational> m(2);
  m(0, 0) = ComplexRational(c1, c2);
  m(1, 0) = ComplexRational(c3, -c4);
  return m;
}

ExactMatrix parse_matrix(std::string_view text) {
  std::vector<std::vector<Rational>> rows;
  std::string normalized(text);
  std::replace(normalized.begin(), normalized.end(), ';', '\n');
  std::istringstream lines(normalized);
  std::string line;
  while (std::getline(lines, line)) {
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream tokens(line);
    std::vector<Rational> row;
    std::string token;
    while (tokens >> token) row.push_back(parse_rational(token));
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("empty matrix");
  const std::size_t n = rows.size();
  std::vector<Rational> flat;
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw ParseError("matrix row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                       " entries, expected " + std::to_string(n));
    }
    flat.insert(flat.end(), rows[i].begin(), rows[i].end());
  }
  return ExactMatrix(n, std::move(flat));
}

namespace {

template <class T, class Format>
std::string format_rows(const Matrix<T>& m, Format&& format) {
  std::string out;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (j > 0) out += ' ';
      out += format(m(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace

std::string format_matrix(const ExactMatrix& m) {
  return format_rows(m, [](const Rational& r) { return to_string(r); });
}

std::string format_matrix(const Matrix<BigFloat>& m, int significant_digits) {
  return format_rows(m, [&](const BigFloat& x) { return x.to_string(significant_digits); });
}

std::string format_matrix(const Matrix<Complex>& m, int significant_digits) {
  return format_rows(m, [&](const Complex& z) { return to_string(z, significant_digits); });
}

}  // namespace gafunc

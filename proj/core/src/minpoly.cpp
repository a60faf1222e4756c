#include "gafunc/minpoly.hpp"

#include <algorithm>

namespace gafunc {

std::vector<std::vector<Rational>> null_space(const std::vector<std::vector<Rational>>& vectors) {
  if (vectors.empty()) return {};
  const std::size_t cols = vectors.size();
  const std::size_t rows = vectors.front().size();
  for (const auto& v : vectors) {
    if (v.size() != rows) throw std::invalid_argument("null_space: vectors differ in length");
  }

  // Clear denominators column by column; column j of the integer matrix is scale[j] * v_j.
  std::vector<Integer> scale(cols, Integer(1));
  std::vector<std::vector<Integer>> m(rows, std::vector<Integer>(cols));
  for (std::size_t j = 0; j < cols; ++j) {
    for (const Rational& x : vectors[j]) mpz_lcm(scale[j].get_mpz_t(), scale[j].get_mpz_t(), x.get_den_mpz_t());
    for (std::size_t i = 0; i < rows; ++i) m[i][j] = vectors[j][i].get_num() * (scale[j] / vectors[j][i].get_den());
  }

  // Fraction-free row echelon form: every division below is exact.
  Integer previous = 1;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t found = r;
    while (found < rows && sgn(m[found][c]) == 0) ++found;
    if (found == rows) continue;
    std::swap(m[found], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), previous.get_mpz_t());
      }
      m[i][c] = 0;
    }
    previous = m[r][c];
    pivots.push_back(c);
    ++r;
  }

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::vector<Rational> x(cols, Rational(0));
    x[free] = 1;
    for (std::size_t k = pivots.size(); k-- > 0;) {
      const std::size_t p = pivots[k];
      Rational acc = 0;
      for (std::size_t j = p + 1; j < cols; ++j) {
        if (!is_zero(x[j]) && sgn(m[k][j]) != 0) acc += Rational(m[k][j]) * x[j];
      }
      x[p] = -acc / Rational(m[k][p]);
    }
    // Back to the unscaled columns, then renormalize the free entry to 1.
    for (std::size_t j = 0; j < cols; ++j) x[j] *= scale[j];
    const Rational pivot_value = x[free];
    for (Rational& v : x) v /= pivot_value;
    basis.push_back(std::move(x));
  }
  return basis;
}

MinPolyResult minimal_poly(const Multivector<Rational>& a) {
  Multivector<Rational> last = Multivector<Rational>::scalar(a.signature(), Rational(1));
  auto power_vector = [&](int k) {
    if (k > 0) last = geometric_product(a, last);
    return to_coefficient_list(last);
  };
  return detail::minimal_poly_from_powers<Rational>(power_vector, a.signature().char_degree());
}

int mv_rank(const Multivector<Rational>& a) { return minimal_poly(a).degree(); }

}  // namespace gafunc

#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "gafunc/multivector.hpp"
#include "gafunc/polynomial.hpp"

namespace gafunc {

template <class F>
struct BasicMinPoly {
  /// Monic minimal polynomial (C_(0) = +1).
  Polynomial<F> mu;
  /// First null-space vector over the power list A^1..A^k, normalized so its
  /// last entry is 1 (for a^2 = a this is {-1, 1}).
  std::vector<F> combination;
  /// True when the combination annihilates A after shifting it down one power,
  /// i.e. it is read against x^0..x^(k-1) instead of x^1..x^k.
  bool degree_reduced = false;

  int degree() const { return mu.degree(); }
};

using MinPolyResult = BasicMinPoly<Rational>;

/// Kernel basis of the matrix whose columns are `vectors`, computed exactly
/// with fraction-free (Bareiss) elimination. Each basis vector has a 1 at its
/// free column and zeros at the other free columns. Empty when the columns are
/// independent.
std::vector<std::vector<Rational>> null_space(const std::vector<std::vector<Rational>>& vectors);

namespace detail {

/// Row-reduced exact basis of the vectors inserted so far, remembering how each
/// reduced row combines the inserted vectors.
template <class F>
class IncrementalSpan {
 public:
  /// Inserts v. Returns the dependency c (over all inserted vectors, last entry 1)
  /// with sum c_j v_j = 0 if v lies in the span of the previous vectors.
  std::optional<std::vector<F>> insert(std::vector<F> v) {
    const std::size_t count = inserted_++;
    std::vector<F> comb(count + 1, F(0));
    comb[count] = F(1);
    for (const Row& row : rows_) {
      if (is_zero(v[row.pivot])) continue;
      const F factor = v[row.pivot] / row.values[row.pivot];
      for (std::size_t i = row.pivot; i < v.size(); ++i) {
        if (!is_zero(row.values[i])) v[i] -= factor * row.values[i];
      }
      for (std::size_t j = 0; j < row.comb.size(); ++j) {
        if (!is_zero(row.comb[j])) comb[j] -= factor * row.comb[j];
      }
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!is_zero(v[i])) {
        rows_.push_back(Row{std::move(v), i, std::move(comb)});
        return std::nullopt;
      }
    }
    return comb;
  }

 private:
  struct Row {
    std::vector<F> values;
    std::size_t pivot;  // first nonzero entry
    std::vector<F> comb;
  };

  std::vector<Row> rows_;
  std::size_t inserted_ = 0;
};

/// Minimal polynomial from coefficient vectors of successive powers.
/// `power_vector(k)` must return the flattened A^k for k = 0, 1, 2, ... in order.
/// Dependency search starts at A^1; once A^1..A^k become dependent the
/// combination either annihilates A after a downward shift (then it spans
/// x^0..x^(k-1)) or it does not (then it spans x^1..x^k).
template <class F, class PowerVector>
BasicMinPoly<F> minimal_poly_from_powers(PowerVector&& power_vector, int max_degree) {
  std::vector<std::vector<F>> powers;
  powers.push_back(power_vector(0));
  IncrementalSpan<F> span;
  for (int k = 1; k <= max_degree + 1; ++k) {
    powers.push_back(power_vector(k));
    std::optional<std::vector<F>> comb = span.insert(powers.back());
    if (!comb) continue;

    // Shifted reading: sum_j comb[j-1] A^(j-1), j = 1..k.
    bool shifted_annihilates = true;
    const std::size_t len = powers[0].size();
    for (std::size_t i = 0; i < len && shifted_annihilates; ++i) {
      F acc(0);
      for (int j = 1; j <= k; ++j) acc += (*comb)[static_cast<std::size_t>(j - 1)] * powers[static_cast<std::size_t>(j - 1)][i];
      shifted_annihilates = is_zero(acc);
    }

    BasicMinPoly<F> result;
    std::vector<F> coeffs;
    if (!shifted_annihilates) coeffs.push_back(F(0));
    coeffs.insert(coeffs.end(), comb->begin(), comb->end());
    result.mu = Polynomial<F>(std::move(coeffs));
    result.combination = std::move(*comb);
    result.degree_reduced = shifted_annihilates;
    return result;
  }
  throw std::logic_error("no linear dependency among powers up to degree " + std::to_string(max_degree + 1));
}

}  // namespace detail

/// Minimal polynomial of a multivector: incremental dependency search over the
/// coefficient vectors of A, A^2, ... (terminates by Cayley-Hamilton).
MinPolyResult minimal_poly(const Multivector<Rational>& a);

/// Rank of a multivector, defined as the degree of its minimal polynomial.
int mv_rank(const Multivector<Rational>& a);

}  // namespace gafunc

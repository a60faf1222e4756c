#include "gafunc/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace gafunc {

int RootSet::max_multiplicity() const {
  int m = 0;
  for (const Root& r : entries) m = std::max(m, r.multiplicity);
  return m;
}

int RootSet::total_multiplicity() const {
  int m = 0;
  for (const Root& r : entries) m += r.multiplicity;
  return m;
}

namespace {

constexpr int kSweepBudget = 200;
// Extra digits carried during refinement on top of the requested precision.
constexpr int kRefineGuard = 20;
// Corrections below 10^-(digits + kStopMargin) relative count as converged.
constexpr int kStopMargin = 8;

struct AberthOutcome {
  std::vector<Complex> roots;
  bool converged = false;
  double worst_log10_correction = 0;
};

AberthOutcome aberth(const Polynomial<Rational>& f, int digits) {
  const int n = f.degree();
  const int work = digits + kRefineGuard;
  std::vector<Complex> coeffs;
  for (const Rational& c : f.coefficients()) coeffs.emplace_back(c, work);

  // Initial guesses: circle around the centroid, radius from the Fujiwara bound.
  const double lead = std::abs(f.leading().get_d());
  double radius = 0;
  for (int k = 0; k < n; ++k) {
    const double c = std::abs(f.coeff(k).get_d());
    if (c == 0) continue;
    radius = std::max(radius, std::pow(c / lead, 1.0 / (n - k)));
  }
  radius = 2 * std::max(radius, 1e-3);
  const double centre = -f.coeff(n - 1).get_d() / (n * f.leading().get_d());

  AberthOutcome out;
  for (int k = 0; k < n; ++k) {
    const double theta = 2 * std::numbers::pi * k / n + 0.4;
    out.roots.emplace_back(BigFloat(centre + radius * std::cos(theta), work), BigFloat(radius * std::sin(theta), work));
  }

  const double stop = -(digits + kStopMargin);
  const BigFloat one(1L, work);
  bool polished = false;
  for (int sweep = 0; sweep < kSweepBudget; ++sweep) {
    double worst = -1e9;
    for (int k = 0; k < n; ++k) {
      Complex& z = out.roots[static_cast<std::size_t>(k)];
      Complex p = coeffs.back();
      Complex dp(BigFloat::with_bits(z.bits()), BigFloat::with_bits(z.bits()));
      for (int i = n - 1; i >= 0; --i) {
        dp = dp * z + p;
        p = p * z + coeffs[static_cast<std::size_t>(i)];
      }
      if (is_zero(p)) continue;
      const Complex ratio = p / dp;
      Complex repulsion(BigFloat::with_bits(z.bits()), BigFloat::with_bits(z.bits()));
      for (int j = 0; j < n; ++j) {
        if (j != k) repulsion += Complex(one) / (z - out.roots[static_cast<std::size_t>(j)]);
      }
      const Complex step = ratio / (Complex(one) - ratio * repulsion);
      z -= step;
      const BigFloat scale = std::max(abs(z), one);
      worst = std::max(worst, log10_abs(abs(step) / scale));
    }
    out.worst_log10_correction = worst;
    if (worst <= stop) {
      if (polished) {
        out.converged = true;
        break;
      }
      polished = true;  // one more sweep after the first converged one
    }
  }
  return out;
}

/// Exact rational root near z, if any. A rational root r of a primitive
/// integer polynomial with leading coefficient L satisfies L * r in Z.
std::optional<Rational> rational_root_near(const Polynomial<Rational>& f, const std::vector<Integer>& primitive,
                                           const Complex& z) {
  const Integer& lead = primitive.back();
  BigFloat scaled = z.re() * BigFloat(lead, z.digits());
  mpfr_round(scaled.raw(), scaled.raw());
  Integer numerator;
  mpfr_get_z(numerator.get_mpz_t(), scaled.raw(), MPFR_RNDN);
  const Rational candidate = make_rational(numerator, lead);
  if (is_zero(poly_eval(f, candidate))) return candidate;
  return std::nullopt;
}

}  // namespace

std::vector<Complex> aberth_roots(const Polynomial<Rational>& squarefree, int digits) {
  if (squarefree.degree() < 1) return {};
  if (squarefree.degree() == 1) {
    const Rational r = -squarefree.coeff(0) / squarefree.coeff(1);
    return {Complex(r, digits)};
  }
  AberthOutcome outcome = aberth(squarefree, digits);
  if (!outcome.converged) outcome = aberth(squarefree, 2 * digits);
  if (!outcome.converged) {
    throw NonConvergence("root refinement did not converge for factor " + to_string(squarefree) +
                         " (last relative correction 1e" +
                         std::to_string(static_cast<int>(outcome.worst_log10_correction)) + ")");
  }
  return outcome.roots;
}

RootSet extract_roots(const Polynomial<Rational>& mu, Precision precision) {
  if (mu.degree() < 1) throw std::invalid_argument("extract_roots needs a polynomial of degree >= 1");
  const int digits = precision.digits();
  const int work = digits + kRefineGuard;
  RootSet set;
  set.source = mu;
  set.achieved_digits = digits;

  // Pairing tolerance, relative: 10^(-digits/2).
  const BigFloat tolerance = pow10(-digits / 2, work);
  const BigFloat one(1L, work);

  for (const SquarefreeFactor& sf : squarefree_decomposition(mu)) {
    const std::vector<Integer> primitive = primitive_integer_form(sf.factor);
    std::vector<Complex> values = aberth_roots(sf.factor, digits);
    std::vector<Root> roots;
    for (Complex& v : values) {
      v.promote(digits_to_bits(work));
      Root root;
      root.multiplicity = sf.multiplicity;
      const BigFloat scale = std::max(abs(v), one);
      if (abs(v.im()) < tolerance * scale) {
        if (auto r = rational_root_near(sf.factor, primitive, v)) {
          root.exact = *r;
          root.value = Complex(*r, work);
        } else {
          root.value = Complex(v.re(), BigFloat::with_bits(v.bits()));
        }
        root.is_real = true;
      } else {
        root.value = v;
      }
      roots.push_back(std::move(root));
    }

    // Pair conjugates and symmetrize.
    std::vector<bool> paired(roots.size(), false);
    for (std::size_t a = 0; a < roots.size(); ++a) {
      if (roots[a].is_real || paired[a]) continue;
      const BigFloat scale = std::max(abs(roots[a].value), one);
      std::optional<std::size_t> best;
      for (std::size_t b = a + 1; b < roots.size(); ++b) {
        if (roots[b].is_real || paired[b]) continue;
        if (abs(roots[a].value - conj(roots[b].value)) < tolerance * scale) {
          best = b;
          break;
        }
      }
      if (!best) {
        throw NonConvergence("root " + to_string(roots[a].value, 20) + " of " + to_string(sf.factor) +
                             " has no conjugate partner");
      }
      const BigFloat two(2L);
      const BigFloat re = (roots[a].value.re() + roots[*best].value.re()) / two;
      const BigFloat im = (roots[a].value.im() - roots[*best].value.im()) / two;
      roots[a].value = Complex(re, im);
      roots[*best].value = Complex(re, -im);
      paired[a] = paired[*best] = true;
    }
    for (Root& r : roots) set.entries.push_back(std::move(r));
  }

  std::sort(set.entries.begin(), set.entries.end(), [](const Root& a, const Root& b) {
    if (a.multiplicity != b.multiplicity) return a.multiplicity < b.multiplicity;
    if (int c = compare(a.value.re(), b.value.re()); c != 0) return c < 0;
    return a.value.im() < b.value.im();
  });
  for (std::size_t a = 0; a < set.entries.size(); ++a) {
    if (set.entries[a].is_real) continue;
    for (std::size_t b = 0; b < set.entries.size(); ++b) {
      if (b != a && !set.entries[b].is_real && set.entries[b].multiplicity == set.entries[a].multiplicity &&
          set.entries[b].value == conj(set.entries[a].value)) {
        set.entries[a].conjugate_partner = b;
        break;
      }
    }
  }

  // Residual-based accuracy estimate: Newton correction |mu/mu'| on the squarefree part.
  for (const Root& r : set.entries) {
    if (r.exact) continue;
    Polynomial<Rational> factor;
    for (const SquarefreeFactor& sf : squarefree_decomposition(mu)) {
      if (sf.multiplicity == r.multiplicity) factor = sf.factor;
    }
    const Complex p = poly_eval(factor, r.value);
    const Complex dp = poly_eval(derivative(factor), r.value);
    if (is_zero(p)) continue;
    const double correction = log10_abs(abs(p / dp) / std::max(abs(r.value), one));
    set.achieved_digits = std::min(set.achieved_digits, static_cast<int>(std::floor(-correction)));
  }
  return set;
}

Polynomial<Complex> expand_roots(const RootSet& roots) {
  Polynomial<Complex> out = Polynomial<Complex>::constant(Complex(1L));
  for (const Root& r : roots.entries) out = out * power(linear_factor(r.value), r.multiplicity);
  return out;
}

}  // namespace gafunc

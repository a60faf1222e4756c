#include "gafunc/function.hpp"

#include <algorithm>
#include <mutex>

#include "gafunc/charpoly.hpp"
#include "gafunc/minpoly.hpp"
#include "gafunc/mv_text.hpp"

namespace gafunc {

std::string to_string(Method m) {
  switch (m) {
    case Method::recursive: return "recursive";
    case Method::classical: return "classical";
    case Method::charpoly: return "charpoly";
  }
  return "?";
}

Method parse_method(std::string_view text) {
  if (text == "recursive") return Method::recursive;
  if (text == "classical") return Method::classical;
  if (text == "charpoly") return Method::charpoly;
  throw ParseError("unknown method '" + std::string(text) + "' (expected recursive|classical|charpoly)");
}

std::shared_ptr<const SpectralData> prepare_spectral_data(const Polynomial<Rational>& annihilator, PowerTable powers,
                                                          int working_digits, Method method) {
  auto data = std::make_shared<SpectralData>();
  data->method = method;
  data->working_digits = working_digits;
  data->annihilator = make_monic(annihilator);
  const RootSet roots = extract_roots(data->annihilator, Precision(working_digits));
  if (method == Method::classical) {
    data->basis = classical_basis(data->annihilator, roots).as_spectral();
  } else {
    data->basis = build_spectral_basis(data->annihilator, roots);
  }
  data->powers = std::move(powers);
  return data;
}

Polynomial<Complex> function_polynomial(const SpectralBasis& basis, const FunctionSpec& f, int* max_order) {
  int highest = -1;
  Polynomial<Complex> g;
  for (std::size_t i = 0; i < basis.q.size(); ++i) {
    const Root& root = basis.roots[i];
    const int m = static_cast<int>(basis.q[i].size());
    if (f.singular_at(root.value, m - 1)) throw SingularFunction(f.name(), to_string(root.value, 20));
    for (int t = 0; t < m; ++t) {
      Complex weight = f.derivative(root.value, t);
      highest = std::max(highest, t);
      if (t > 1) weight = weight / Complex(Rational(factorial(static_cast<unsigned long>(t))), root.value.digits());
      g += basis.Q(i, t) * weight;
    }
  }
  if (max_order) *max_order = highest;
  return g;
}

std::shared_ptr<const SpectralData> SpectralCache::find(const std::string& key) const {
  std::shared_lock lock(mutex_);
  auto it = entries_.find(key);
  return it == entries_.end() ? nullptr : it->second;
}

std::shared_ptr<const SpectralData> SpectralCache::insert(const std::string& key,
                                                          std::shared_ptr<const SpectralData> data) {
  std::unique_lock lock(mutex_);
  if (auto it = entries_.find(key); it != entries_.end()) return it->second;
  if (entries_.size() >= capacity_) entries_.clear();
  entries_.emplace(key, data);
  return data;
}

void SpectralCache::clear() {
  std::unique_lock lock(mutex_);
  entries_.clear();
}

std::size_t SpectralCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

SpectralCache& default_spectral_cache() {
  static SpectralCache cache;
  return cache;
}

namespace {

std::shared_ptr<const SpectralData> spectral_data_for(const Multivector<Rational>& a, int working_digits,
                                                      Method method) {
  const Polynomial<Rational> annihilator =
      method == Method::charpoly ? char_poly(a).monic() : minimal_poly(a).mu;
  PowerTable powers = mv_power_table(a, annihilator.degree() - 1, working_digits);
  return prepare_spectral_data(annihilator, std::move(powers), working_digits, method);
}

}  // namespace

BigFloat realness_tolerance(int digits) { return pow10(-digits / 2, digits); }

Multivector<BigFloat> real_reduction(const Multivector<Complex>& value, const BigFloat& tolerance) {
  BigFloat max_re = BigFloat::with_bits(tolerance.bits());
  BigFloat max_im = BigFloat::with_bits(tolerance.bits());
  for (const Complex& c : value.coefficients()) {
    max_re = std::max(max_re, abs(c.re()));
    max_im = std::max(max_im, abs(c.im()));
  }
  if (max_im >= tolerance * (BigFloat(1L) + max_re)) {
    throw RealnessFailure("imaginary residual " + max_im.to_string(6) + " exceeds tolerance " +
                              tolerance.to_string(3) + " (relative)",
                          log10_abs(max_im));
  }
  return map_coefficients<BigFloat>(value, [](const Complex& c) { return c.re(); });
}

FunctionResult mv_function(const Multivector<Rational>& a, const FunctionSpec& f, Precision precision,
                           const FunctionOptions& options) {
  const int working = precision.digits() + kGuardDigits;
  std::shared_ptr<const SpectralData> data;
  bool reused = false;
  std::string key;
  if (options.cache) {
    key = to_string(a.signature()) + "|" + format_multivector(a) + "|" + std::to_string(working) + "|" +
          to_string(options.method);
    data = options.cache->find(key);
    reused = data != nullptr;
  }
  if (!data) {
    data = spectral_data_for(a, working, options.method);
    if (options.cache) data = options.cache->insert(key, data);
  }

  FunctionResult result{Multivector<Complex>(a.signature()), std::nullopt, BigFloat::with_bits(digits_to_bits(working)),
                        {}};
  int max_order = -1;
  const Polynomial<Complex> g = function_polynomial(data->basis, f, &max_order);
  result.value = Multivector<Complex>(a.signature(), data->powers.evaluate(g));

  FunctionDiagnostics& diag = result.diagnostics;
  diag.method = options.method;
  diag.requested_digits = precision.digits();
  diag.working_digits = working;
  diag.annihilator = data->annihilator;
  diag.roots = data->basis.roots;
  diag.basis_reused = reused;
  diag.max_derivative_order = max_order;

  for (const Complex& c : result.value.coefficients()) {
    result.max_imag_residual = std::max(result.max_imag_residual, abs(c.im()));
  }
  try {
    result.real_form = real_reduction(result.value, realness_tolerance(precision.digits()));
  } catch (const RealnessFailure&) {
    if (f.real_symmetric()) throw;
  }
  return result;
}

BigFloat verify_exponential(const Multivector<Rational>& a, const FunctionResult& exp_a, Precision precision,
                            const FunctionOptions& options) {
  const FunctionResult derivative = mv_function(a, FunctionSpec::z_exp(), precision, options);
  const Multivector<Complex> lhs = lift_to_complex(a, exp_a.diagnostics.working_digits) * exp_a.value;
  return max_abs_coefficient(lhs - derivative.value);
}

}  // namespace gafunc

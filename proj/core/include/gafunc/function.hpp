#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>

#include "gafunc/classical.hpp"
#include "gafunc/function_spec.hpp"
#include "gafunc/multivector.hpp"
#include "gafunc/roots.hpp"
#include "gafunc/spectral.hpp"

namespace gafunc {

/// Extra digits carried through roots, basis and assembly beyond the requested precision.
inline constexpr int kGuardDigits = 20;

enum class Method {
  /// minimal polynomial + recursive spectral basis (the production path)
  recursive,
  /// minimal polynomial + partial-fraction basis (cross-check)
  classical,
  /// characteristic polynomial in place of the minimal polynomial
  charpoly,
};

std::string to_string(Method m);
/// "recursive" | "classical" | "charpoly"; throws ParseError.
Method parse_method(std::string_view text);

/// Everything about A that does not depend on f.
struct SpectralData {
  Method method = Method::recursive;
  int working_digits = 0;
  /// mu, or chi/(-1) in charpoly mode
  Polynomial<Rational> annihilator;
  /// Q_i^k lists (classical mode: p_i, q_i, q_i^2, ...)
  SpectralBasis basis;
  /// X^0 .. X^(deg - 1)
  PowerTable powers;
};

/// Builds roots and basis for a given annihilating polynomial. `powers` must
/// hold at least deg(annihilator) powers at `working_digits`.
std::shared_ptr<const SpectralData> prepare_spectral_data(const Polynomial<Rational>& annihilator, PowerTable powers,
                                                          int working_digits, Method method);

/// F(x) = sum_i sum_t (1/t!) f^(t)(lambda_i) Q_i^t. Throws SingularFunction.
/// `max_order` receives the highest derivative order evaluated (-1 if none).
Polynomial<Complex> function_polynomial(const SpectralBasis& basis, const FunctionSpec& f, int* max_order = nullptr);

/// Per-multivector memo of SpectralData keyed by signature, exact coefficients,
/// precision and method. Lookups take a shared lock; inserts an exclusive one.
class SpectralCache {
 public:
  explicit SpectralCache(std::size_t capacity = 256) : capacity_(capacity) {}

  std::shared_ptr<const SpectralData> find(const std::string& key) const;
  /// Returns the stored entry (an earlier one if another thread won the race).
  std::shared_ptr<const SpectralData> insert(const std::string& key, std::shared_ptr<const SpectralData> data);
  void clear();
  std::size_t size() const;

 private:
  std::size_t capacity_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, std::shared_ptr<const SpectralData>> entries_;
};

SpectralCache& default_spectral_cache();

struct FunctionOptions {
  Method method = Method::recursive;
  /// nullptr disables caching
  SpectralCache* cache = &default_spectral_cache();
};

struct FunctionDiagnostics {
  Method method = Method::recursive;
  int requested_digits = 0;
  int working_digits = 0;
  Polynomial<Rational> annihilator;
  RootSet roots;
  bool basis_reused = false;
  /// highest derivative order at which f was evaluated
  int max_derivative_order = -1;
};

struct FunctionResult {
  Multivector<Complex> value;
  /// present iff the imaginary residual is below the realness tolerance
  std::optional<Multivector<BigFloat>> real_form;
  BigFloat max_imag_residual;
  FunctionDiagnostics diagnostics;
};

/// f(A) through the generalized spectral basis of A.
///
/// Throws SingularFunction when a root is a singularity of f, and
/// RealnessFailure when f is real_symmetric but the imaginary residual exceeds
/// 10^(-digits/2) relative.
FunctionResult mv_function(const Multivector<Rational>& a, const FunctionSpec& f, Precision precision = {},
                           const FunctionOptions& options = {});

/// Relative realness tolerance for a requested precision: 10^(-digits/2).
BigFloat realness_tolerance(int digits);

/// Drops imaginary parts when max|im| < tolerance (1 + max|re|); throws
/// RealnessFailure otherwise.
Multivector<BigFloat> real_reduction(const Multivector<Complex>& value, const BigFloat& tolerance);

/// max |A exp(A) - g(A)|, with g(z) = z e^z giving d/dt exp(tA) at t = 1.
BigFloat verify_exponential(const Multivector<Rational>& a, const FunctionResult& exp_a, Precision precision = {},
                            const FunctionOptions& options = {});

}  // namespace gafunc

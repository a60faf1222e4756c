#include "gafunc/multivector.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <mutex>

namespace gafunc {

Signature::Signature(int p, int q) : p_(p), q_(q) {
  if (p < 0 || q < 0 || p + q < 1 || p + q > kMaxGenerators) {
    throw std::invalid_argument("invalid signature (" + std::to_string(p) + "," + std::to_string(q) +
                                "): need p,q >= 0 and 1 <= p+q <= " + std::to_string(kMaxGenerators));
  }
}

std::string to_string(const Signature& sig) {
  return "Cl(" + std::to_string(sig.p()) + "," + std::to_string(sig.q()) + ")";
}

namespace {

struct BasisLayout {
  std::vector<Blade> order;
  std::vector<std::uint32_t> index;  // mask -> position
};

std::vector<int> indices_of(BladeMask mask) {
  std::vector<int> out;
  for (int i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1U) out.push_back(i);
  }
  return out;
}

BasisLayout make_layout(int n) {
  BasisLayout layout;
  const std::size_t dim = std::size_t{1} << n;
  layout.order.reserve(dim);
  for (std::size_t m = 0; m < dim; ++m) layout.order.push_back(Blade{static_cast<BladeMask>(m)});
  std::sort(layout.order.begin(), layout.order.end(), [](const Blade& a, const Blade& b) {
    if (a.grade() != b.grade()) return a.grade() < b.grade();
    return indices_of(a.mask) < indices_of(b.mask);
  });
  layout.index.resize(dim);
  for (std::size_t pos = 0; pos < dim; ++pos) layout.index[layout.order[pos].mask] = static_cast<std::uint32_t>(pos);
  return layout;
}

const BasisLayout& layout_for(int n) {
  static std::mutex mutex;
  static std::array<std::unique_ptr<BasisLayout>, kMaxGenerators + 1> layouts;
  std::lock_guard lock(mutex);
  auto& slot = layouts[static_cast<std::size_t>(n)];
  if (!slot) slot = std::make_unique<BasisLayout>(make_layout(n));
  return *slot;
}

constexpr int kMaxTabulatedGenerators = 8;

const std::vector<detail::ProductEntry>& table_for(const Signature& sig) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<std::vector<detail::ProductEntry>>> tables;
  std::lock_guard lock(mutex);
  auto& slot = tables[{sig.p(), sig.q()}];
  if (!slot) {
    const BasisLayout& layout = layout_for(sig.n());
    const std::size_t dim = sig.algebra_dim();
    auto table = std::make_unique<std::vector<detail::ProductEntry>>(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        const BladeMask a = layout.order[i].mask;
        const BladeMask b = layout.order[j].mask;
        (*table)[i * dim + j] = {static_cast<std::int8_t>(blade_product_sign(sig, a, b)), layout.index[a ^ b]};
      }
    }
    slot = std::move(table);
  }
  return *slot;
}

}  // namespace

const std::vector<Blade>& blade_order(const Signature& sig) { return layout_for(sig.n()).order; }

std::size_t blade_index(const Signature& sig, BladeMask mask) {
  if (mask >= sig.algebra_dim()) {
    throw std::out_of_range("blade mask out of range for " + to_string(sig));
  }
  return layout_for(sig.n()).index[mask];
}

std::string blade_name(BladeMask mask, int n) {
  if (mask == 0) return "1";
  std::string name = "e";
  bool first = true;
  for (int i : indices_of(mask)) {
    if (!first && n > 9) name += '_';
    name += std::to_string(i + 1);
    first = false;
  }
  return name;
}

int blade_product_sign(const Signature& sig, BladeMask a, BladeMask b) {
  // Count generator pairs that must be swapped to merge e_a e_b into ascending order.
  int swaps = 0;
  for (BladeMask s = a >> 1; s != 0; s >>= 1) swaps += std::popcount(s & b);
  int sign = (swaps & 1) ? -1 : 1;
  const BladeMask negative_generators = static_cast<BladeMask>(((1ULL << sig.n()) - 1) & ~((1ULL << sig.p()) - 1));
  if (std::popcount(a & b & negative_generators) & 1) sign = -sign;
  return sign;
}

namespace detail {

ProductTable::ProductTable(const Signature& sig)
    : sig_(sig),
      dim_(sig.algebra_dim()),
      order_(&layout_for(sig.n()).order),
      index_(&layout_for(sig.n()).index),
      table_(sig.n() <= kMaxTabulatedGenerators ? &table_for(sig) : nullptr) {}

ProductEntry ProductTable::operator()(std::size_t i, std::size_t j) const {
  if (table_ != nullptr) return (*table_)[i * dim_ + j];
  const BladeMask a = (*order_)[i].mask;
  const BladeMask b = (*order_)[j].mask;
  return {static_cast<std::int8_t>(blade_product_sign(sig_, a, b)), (*index_)[a ^ b]};
}

}  // namespace detail

Multivector<Complex> lift_to_complex(const Multivector<Rational>& a, int digits) {
  return map_coefficients<Complex>(a, [digits](const Rational& c) { return Complex(c, digits); });
}

Multivector<BigFloat> lift_to_real(const Multivector<Rational>& a, int digits) {
  return map_coefficients<BigFloat>(a, [digits](const Rational& c) { return BigFloat(c, digits); });
}

Multivector<Complex> lift_to_complex(const Multivector<BigFloat>& a) {
  return map_coefficients<Complex>(a, [](const BigFloat& c) { return Complex(c); });
}

BigFloat max_abs_coefficient(const Multivector<Complex>& a) {
  BigFloat best;
  for (const Complex& c : a.coefficients()) {
    BigFloat m = max_abs_part(c);
    if (m > best) best = m;
  }
  return best;
}

BigFloat max_abs_coefficient(const Multivector<BigFloat>& a) {
  BigFloat best;
  for (const BigFloat& c : a.coefficients()) {
    BigFloat m = abs(c);
    if (m > best) best = m;
  }
  return best;
}

}  // namespace gafunc

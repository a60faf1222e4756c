#pragma once

#include <fstream>
#include <map>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "gafunc/multivector.hpp"
#include "gafunc/mv_text.hpp"

namespace gafunc::testing {

inline nlohmann::json load_golden(const std::string& file) {
  std::ifstream in(std::string(GAFUNC_GOLDEN_DIR) + "/" + file);
  if (!in) throw std::runtime_error("missing golden file " + file);
  return nlohmann::json::parse(in);
}

struct GoldenFunction {
  Signature signature{1, 0};
  Multivector<Rational> input{Signature(1, 0)};
  std::string input_text;
  /// expected real coefficients in blade order
  Multivector<BigFloat> expected{Signature(1, 0)};
};

inline GoldenFunction load_golden_function(const std::string& file, int digits = 80) {
  const nlohmann::json j = load_golden(file);
  GoldenFunction g;
  g.signature = Signature(j["signature"][0].get<int>(), j["signature"][1].get<int>());
  g.input_text = j["input"].get<std::string>();
  g.input = parse_multivector(g.input_text, g.signature);
  std::vector<BigFloat> coeffs;
  for (const Blade& b : blade_order(g.signature)) {
    coeffs.emplace_back(j["real"].at(blade_name(b.mask, g.signature.n())).get<std::string>(), digits);
  }
  g.expected = Multivector<BigFloat>(g.signature, std::move(coeffs));
  return g;
}

/// log10 of max |a_J - b_J| (-1000 when identical).
inline double log10_distance(const Multivector<BigFloat>& a, const Multivector<BigFloat>& b) {
  double worst = -1000;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const BigFloat d = abs(a[i] - b[i]);
    if (!is_zero(d)) worst = std::max(worst, log10_abs(d));
  }
  return worst;
}

inline double log10_distance(const Multivector<Complex>& a, const Multivector<Complex>& b) {
  double worst = -1000;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const BigFloat d = abs(a[i] - b[i]);
    if (!is_zero(d)) worst = std::max(worst, log10_abs(d));
  }
  return worst;
}

}  // namespace gafunc::testing

#pragma once

// Worked examples used across the test suite.

#include <string>

#include "gafunc/multivector.hpp"
#include "gafunc/mv_text.hpp"

namespace gafunc::fixtures {

inline const Signature kCl30{3, 0};
inline const Signature kCl42{4, 2};

inline const char* const kEx1Text = "-1 + 2*e1 - 2*e12 - e123 - 2*e13 + e2 + e23 + 2*e3";

inline const char* const kEx2Text =
    "1/8*(2*e1 - e13 - e134 + 2*e1345 - 10*e13456 + 4*e135 + 2*e136 - 4*e14 + e145 - 2*e1456 + 2*e146 - e15 "
    "+ 4*e16 - 2*e34 - 4*e345 + 2*e3456 - e346 - 2*e35 - 4*e356 + e36 + e456 + 2*e5 + e56 + 2*e6 + 30)";

inline const char* const kEx3Text =
    "-1 - e3 + e6 - e12 - e13 + e15 - e24 - e25 + e26 - e34 - e35 + e36 - e45 + e56 + e123 + e124 + e126 "
    "+ e134 + e135 + e136 + e146 + e234 - e235 - e236 - e245 - e246 - e256 + e456 - e1236 + e1245 - e1246 "
    "+ e1256 - e1345 - e1346 - e1356 + e1456 - e2346 - e2356 + e2456 + e3456 + e12345 - e12346 + e12356";

/// The ex2 text carries a global 1/8 factor, which the term grammar does not
/// accept; expand it here.
inline Multivector<Rational> ex2() {
  std::string body(kEx2Text);
  body = body.substr(5, body.size() - 6);
  return parse_multivector(body, kCl42) * Rational(1, 8);
}

inline Multivector<Rational> ex1() { return parse_multivector(kEx1Text, kCl30); }
inline Multivector<Rational> ex3() { return parse_multivector(kEx3Text, kCl42); }

inline Multivector<Rational> idempotent() { return parse_multivector("1/2 + 1/2*e1", kCl30); }

/// Spinor psi = c1/2 (1+e1) + c3/2 (e2-e12) + c2/2 (e123+e23) + c4/2 (e13-e3) at c = (1,2,3,4).
inline Multivector<Rational> spinor() {
  return parse_multivector("1/2 + 1/2*e1 + 3/2*e2 - 3/2*e12 + e123 + e23 + 2*e13 - 2*e3", kCl30);
}

}  // namespace gafunc::fixtures

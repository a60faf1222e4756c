#pragma once

#include <string>
#include <string_view>

#include "gafunc/multivector.hpp"

namespace gafunc {

/// Parses sums of terms such as `-1 + 2*e1 - 1/2*e12 - e123`.
///
/// Whitespace is ignored. A term is an optional coefficient (integer, decimal
/// or `p/q`), an optional `*`, and an optional blade `e<indices>`. Indices are
/// single digits, or `_`-separated numbers (`e1_10`) which is mandatory once
/// n > 9. Unsorted or repeated indices are reduced with the algebra's sign rules.
/// Throws ParseError on malformed input, including the empty string.
Multivector<Rational> parse_multivector(std::string_view text, const Signature& sig);

/// Canonical text form (blade order, exact coefficients). Inverse of parse_multivector.
std::string format_multivector(const Multivector<Rational>& a);
std::string format_multivector(const Multivector<BigFloat>& a, int significant_digits);
std::string format_multivector(const Multivector<Complex>& a, int significant_digits);

}  // namespace gafunc

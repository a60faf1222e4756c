#include "gafunc/mv_text.hpp"

#include <cctype>
#include <vector>

namespace gafunc {

namespace {

class TermParser {
 public:
  TermParser(std::string_view text, const Signature& sig) : sig_(sig) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) text_.push_back(c);
    }
  }

  Multivector<Rational> parse() {
    if (text_.empty()) throw ParseError("empty multivector text");
    std::vector<Rational> coeffs(sig_.algebra_dim(), Rational(0));
    while (pos_ < text_.size()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = text_[pos_++] == '-';
      } else if (pos_ != 0) {
        fail("expected '+' or '-'");
      }
      Rational coeff = parse_coefficient();
      int sign = 1;
      BladeMask mask = 0;
      if (peek() == 'e') {
        std::tie(sign, mask) = parse_blade();
      } else if (!had_coefficient_) {
        fail("expected a coefficient or a blade");
      }
      if (negative) sign = -sign;
      coeffs[blade_index(sig_, mask)] += sign > 0 ? coeff : Rational(-coeff);
    }
    return Multivector<Rational>(sig_, std::move(coeffs));
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + text_ + "'");
  }

  Rational parse_coefficient() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.' || peek() == '/') ++pos_;
    had_coefficient_ = pos_ > start;
    if (!had_coefficient_) return Rational(1);
    Rational value = parse_rational(std::string_view(text_).substr(start, pos_ - start));
    if (peek() == '*') {
      ++pos_;
      if (peek() != 'e') fail("expected a blade after '*'");
    }
    return value;
  }

  std::pair<int, BladeMask> parse_blade() {
    ++pos_;  // 'e'
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
    const std::string run = text_.substr(start, pos_ - start);
    std::vector<int> indices;
    if (run.find('_') != std::string::npos || sig_.n() > 9) {
      std::size_t from = 0;
      while (from <= run.size()) {
        std::size_t to = run.find('_', from);
        if (to == std::string::npos) to = run.size();
        const std::string piece = run.substr(from, to - from);
        if (piece.empty() || piece.size() > 2) fail("malformed generator index list '" + run + "'");
        indices.push_back(std::stoi(piece));
        from = to + 1;
      }
    } else {
      for (char c : run) indices.push_back(c - '0');
    }
    if (indices.empty()) fail("blade without generator indices");
    int sign = 1;
    BladeMask mask = 0;
    for (int index : indices) {
      if (index < 1 || index > sig_.n()) fail("generator e" + std::to_string(index) + " not in " + to_string(sig_));
      const BladeMask generator = BladeMask{1} << (index - 1);
      sign *= blade_product_sign(sig_, mask, generator);
      mask ^= generator;
    }
    return {sign, mask};
  }

  const Signature& sig_;
  std::string text_;
  std::size_t pos_ = 0;
  bool had_coefficient_ = false;
};

template <class T, class Format, class IsNegative>
std::string format_terms(const Multivector<T>& a, Format&& format, IsNegative&& negative) {
  const auto& order = blade_order(a.signature());
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i])) continue;
    const bool neg = negative(a[i]);
    std::string coeff = format(neg ? T(-a[i]) : a[i]);
    std::string term;
    if (order[i].mask == 0) {
      term = coeff;
    } else {
      std::string blade = blade_name(order[i].mask, a.signature().n());
      term = coeff == "1" ? blade : coeff + "*" + blade;
    }
    if (out.empty()) {
      out = neg ? "-" + term : term;
    } else {
      out += neg ? " - " : " + ";
      out += term;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace

Multivector<Rational> parse_multivector(std::string_view text, const Signature& sig) {
  return TermParser(text, sig).parse();
}

std::string format_multivector(const Multivector<Rational>& a) {
  return format_terms(
      a, [](const Rational& c) { return to_string(c); }, [](const Rational& c) { return sgn(c) < 0; });
}

std::string format_multivector(const Multivector<BigFloat>& a, int significant_digits) {
  return format_terms(
      a, [&](const BigFloat& c) { return c.to_string(significant_digits); },
      [](const BigFloat& c) { return c.sign() < 0; });
}

std::string format_multivector(const Multivector<Complex>& a, int significant_digits) {
  return format_terms(
      a, [&](const Complex& c) { return to_string(c, significant_digits); },
      [](const Complex&) { return false; });
}

}  // namespace gafunc

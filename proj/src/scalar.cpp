#include "spin7/scalar.hpp"

#include <cctype>

#include "spin7/errors.hpp"

namespace spin7 {

namespace {

Rational parse_decimal(const std::string& s) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) negative = s[pos++] == '-';
  std::string digits;
  long frac_digits = 0;
  bool seen_digit = false;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    digits += s[pos++];
    seen_digit = true;
  }
  if (pos < s.size() && s[pos] == '.') {
    ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      digits += s[pos++];
      ++frac_digits;
      seen_digit = true;
    }
  }
  if (!seen_digit) throw InputError("not a number: '" + s + "'");
  long exponent = 0;
  if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
    ++pos;
    std::size_t used = 0;
    try {
      exponent = std::stol(s.substr(pos), &used);
    } catch (const std::exception&) {
      throw InputError("bad exponent in '" + s + "'");
    }
    pos += used;
  }
  if (pos != s.size()) throw InputError("trailing characters in '" + s + "'");
  mpz_class mantissa(digits, 10);
  exponent -= frac_digits;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  Rational r = exponent < 0 ? Rational(mantissa, scale) : Rational(mantissa * scale);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw InputError("empty scalar");
  const auto slash = s.find('/');
  if (slash == std::string::npos) return parse_decimal(s);
  Rational num = parse_decimal(s.substr(0, slash));
  Rational den = parse_decimal(s.substr(slash + 1));
  if (sgn(den) == 0) throw InputError("zero denominator in '" + text + "'");
  Rational r = num / den;
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& x) { return x.get_str(); }

}  // namespace spin7

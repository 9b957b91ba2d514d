#include "algrec/numeric.hpp"

#include <cmath>
#include <stdexcept>

namespace algrec {

namespace {

// cpp_int's string constructor reads a leading 0 as octal, so decimal digits
// are normalized first.
Integer parse_decimal_integer(const std::string& text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) negative = text[i++] == '-';
  if (i == text.size()) throw std::invalid_argument("bad integer '" + text + "'");
  for (std::size_t j = i; j < text.size(); ++j)
    if (text[j] < '0' || text[j] > '9') throw std::invalid_argument("bad integer '" + text + "'");
  while (i + 1 < text.size() && text[i] == '0') ++i;
  Integer v(text.substr(i));
  return negative ? Integer(-v) : v;
}

} // namespace

std::string to_string(const Rational& r) {
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
  {
    auto slash = text.find('/');
    if (slash != std::string::npos) {
      Integer den = parse_decimal_integer(text.substr(slash + 1));
      if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
      return Rational(parse_decimal_integer(text.substr(0, slash)), den);
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
      std::string digits = text.substr(0, dot) + text.substr(dot + 1);
      Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(text.size() - dot - 1));
      return Rational(parse_decimal_integer(digits), scale);
    }
    return Rational(parse_decimal_integer(text));
  }
}

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite weight");
  int exp = 0;
  double mant = std::frexp(x, &exp);
  // 53 significant bits
  auto scaled = static_cast<long long>(std::ldexp(mant, 53));
  exp -= 53;
  Rational r{Integer(scaled)};
  if (exp >= 0)
    r *= Rational(Integer(1) << exp);
  else
    r /= Rational(Integer(1) << -exp);
  return r;
}

std::vector<Integer> primitive_integer_vector(const std::vector<Rational>& v) {
  Integer lcm = 1;
  for (const auto& x : v) {
    const Integer den = boost::multiprecision::denominator(x);
    lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
  }
  std::vector<Integer> out;
  out.reserve(v.size());
  Integer g = 0;
  for (const auto& x : v) {
    Integer n = boost::multiprecision::numerator(x) * (lcm / boost::multiprecision::denominator(x));
    g = boost::multiprecision::gcd(g, abs_value(n));
    out.push_back(n);
  }
  if (g > 1)
    for (auto& n : out) n /= g;
  return out;
}

} // namespace algrec

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace algrec {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& r);

/// Parses "p/q", "p", or a decimal such as "0.25" (converted exactly).
Rational parse_rational(const std::string& text);

/// Exact binary value of a double as a rational.
Rational rational_from_double(double x);

/// Multiplies by the lcm of the denominators and divides by the gcd of the
/// numerators. The zero vector is returned unchanged.
std::vector<Integer> primitive_integer_vector(const std::vector<Rational>& v);

inline Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

} // namespace algrec

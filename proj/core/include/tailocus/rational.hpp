#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace tailocus {

// Exact arithmetic substrate. cpp_rational keeps values normalized:
// gcd(num, den) == 1 and den > 0, which is exactly the representation
// the tangent computations rely on.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p", "-p", "p/q" or "-p/q". Throws ConfigError on anything else
// (including a zero denominator).
Rational parse_rational(const std::string& text);

// Canonical rendering: "p" when the denominator is 1, else "p/q" with q > 0.
std::string format_rational(const Rational& value);

// Scales a rational vector to coprime integers with the first nonzero entry
// positive. The zero vector maps to itself. Used to canonicalize dependence
// certificates so identical inputs print identical coefficients.
std::vector<Rational> canonicalize_rational_vector(const std::vector<Rational>& v);

}  // namespace tailocus

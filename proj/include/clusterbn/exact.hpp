#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace clusterbn {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Accepts an optionally signed decimal integer.
Integer parse_integer(std::string_view text);

/// Accepts `p`, `-p`, `p/q` (q != 0). Throws Error(ParseError) otherwise.
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& value);
/// Lowest terms, `p` when the denominator is 1, otherwise `p/q`.
std::string to_string(const Rational& value);

/// Display-only decimal rendering with `significant` significant digits.
std::string to_decimal(const Rational& value, int significant = 6);

/// floor(a / b) for b > 0.
Integer floor_div(const Integer& a, const Integer& b);

}  // namespace clusterbn

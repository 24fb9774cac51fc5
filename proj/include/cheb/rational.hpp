#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cheb {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class Rounding { Nearest, Down, Up };

/// Renders `value` as a decimal with `digits` significant digits.
std::string to_decimal(const Rational& value, int digits, Rounding mode = Rounding::Nearest);

/// "a/b", or "a" when the denominator is 1.
std::string to_string(const Rational& value);

/// Accepts "a/b", "a" and plain decimals like "-1.25". Throws Error(ParseError).
Rational parse_rational(const std::string& text);

double to_double(const Rational& value);

/// floor(sqrt(n)) for n >= 0.
BigInt isqrt(const BigInt& n);

}  // namespace cheb

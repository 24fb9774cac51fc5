#include "cheb/rational.hpp"

#include <cctype>

#include "cheb/error.hpp"

namespace cheb {

namespace {

BigInt pow10(int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= 10;
  return r;
}

// cpp_int reads a leading 0 as an octal prefix
BigInt decimal_int(const std::string& digits) {
  const auto first = digits.find_first_not_of('0');
  return first == std::string::npos ? BigInt(0) : BigInt(digits.substr(first));
}

// floor / ceil / round-half-away of a/b for b > 0
BigInt divide(const BigInt& a, const BigInt& b, Rounding mode) {
  BigInt q = a / b;
  BigInt r = a % b;
  if (r == 0) return q;
  // C++ division truncates toward zero
  switch (mode) {
    case Rounding::Down:
      if (a < 0) q -= 1;
      break;
    case Rounding::Up:
      if (a > 0) q += 1;
      break;
    case Rounding::Nearest: {
      BigInt twice = 2 * (r < 0 ? BigInt(-r) : r);
      if (twice >= b) q += (a < 0 ? -1 : 1);
      break;
    }
  }
  return q;
}

}  // namespace

std::string to_decimal(const Rational& value, int digits, Rounding mode) {
  if (digits < 1) digits = 1;
  if (value == 0) {
    std::string s = "0";
    if (digits > 1) s += "." + std::string(static_cast<std::size_t>(digits - 1), '0');
    return s;
  }
  const bool negative = value < 0;
  const Rational magnitude = negative ? Rational(-value) : value;
  BigInt num = boost::multiprecision::numerator(magnitude);
  BigInt den = boost::multiprecision::denominator(magnitude);

  // decimal exponent e with 10^e <= magnitude < 10^(e+1)
  int e = static_cast<int>(num.str().size()) - static_cast<int>(den.str().size());
  auto at_least_pow = [&](int k) {
    return k >= 0 ? num >= den * pow10(k) : num * pow10(-k) >= den;
  };
  while (!at_least_pow(e)) --e;
  while (at_least_pow(e + 1)) ++e;

  const int shift = digits - 1 - e;
  BigInt scaled_num = num;
  BigInt scaled_den = den;
  if (shift >= 0)
    scaled_num *= pow10(shift);
  else
    scaled_den *= pow10(-shift);
  // Direction is applied to the signed value so Down/Up mean floor/ceil.
  BigInt signed_num = negative ? BigInt(-scaled_num) : scaled_num;
  BigInt rounded = divide(signed_num, scaled_den, mode);
  if (rounded < 0) rounded = -rounded;

  std::string body = rounded.str();
  if (static_cast<int>(body.size()) > digits) {
    // carry into a new leading digit
    ++e;
    body.pop_back();
  }
  const int point = e + 1;
  std::string out;
  if (point <= 0) {
    out = "0." + std::string(static_cast<std::size_t>(-point), '0') + body;
  } else if (point >= static_cast<int>(body.size())) {
    out = body + std::string(static_cast<std::size_t>(point) - body.size(), '0');
  } else {
    out = body.substr(0, static_cast<std::size_t>(point)) + "." +
          body.substr(static_cast<std::size_t>(point));
  }
  return negative ? "-" + out : out;
}

std::string to_string(const Rational& value) {
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return boost::multiprecision::numerator(value).str();
  return boost::multiprecision::numerator(value).str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
  auto valid_int = [](const std::string& s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && s[0] == '-') i = 1;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  if (const auto dot = text.find('.'); dot != std::string::npos) {
    // plain decimal "-12.345"
    const std::string whole = text.substr(0, dot);
    const std::string frac = text.substr(dot + 1);
    const bool whole_ok = valid_int(whole, true) || whole == "-" || whole.empty();
    if (!whole_ok || !valid_int(frac, false))
      throw Error(ErrorCode::ParseError, "malformed rational '" + text + "'");
    const bool negative = !whole.empty() && whole[0] == '-';
    const std::string digits = (negative ? whole.substr(1) : whole) + frac;
    Rational r(decimal_int(digits), pow10(static_cast<int>(frac.size())));
    return negative ? Rational(-r) : r;
  }
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw Error(ErrorCode::ParseError, "malformed rational '" + text + "'");
  const BigInt d = decimal_int(den);
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + text + "'");
  const bool negative = num[0] == '-';
  const BigInt n = decimal_int(negative ? num.substr(1) : num);
  return Rational(negative ? BigInt(-n) : n, d);
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

BigInt isqrt(const BigInt& n) {
  if (n < 2) return n;
  return boost::multiprecision::sqrt(n);
}

}  // namespace cheb

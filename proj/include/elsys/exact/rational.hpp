#pragma once

// Arbitrary-precision integers and rationals, plus the exact conversions
// the rest of the library needs (decimal literals, binary64 values).

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace elsys::exact {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline int sign(const Rational& r) { return r.sign(); }

inline BigInt pow2(unsigned e) {
  BigInt p = 1;
  p <<= e;
  return p;
}

inline BigInt pow10(unsigned e) {
  BigInt p = 1;
  for (unsigned i = 0; i < e; ++i) p *= 10;
  return p;
}

// Largest integer <= r.
inline BigInt floor(const Rational& r) {
  BigInt q = num(r) / den(r);  // truncates toward zero
  if (r.sign() < 0 && q * den(r) != num(r)) q -= 1;
  return q;
}

inline BigInt ceil(const Rational& r) { return -floor(-r); }

// Exact value of a finite binary64 number.
inline Rational from_double(double x) {
  if (!std::isfinite(x)) throw std::domain_error("from_double: non-finite value");
  if (x == 0.0) return Rational(0);
  int exp = 0;
  double m = std::frexp(x, &exp);  // x = m * 2^exp, 0.5 <= |m| < 1
  auto mant = static_cast<std::int64_t>(std::ldexp(m, 53));
  exp -= 53;
  BigInt n = mant;
  if (exp >= 0) return Rational(n << exp);
  return Rational(n, pow2(static_cast<unsigned>(-exp)));
}

// Nearest binary64 at or below / at or above r.
inline double to_double_down(const Rational& r) {
  double d = r.convert_to<double>();
  while (from_double(d) > r) d = std::nextafter(d, -std::numeric_limits<double>::infinity());
  return d;
}

inline double to_double_up(const Rational& r) {
  double d = r.convert_to<double>();
  while (from_double(d) < r) d = std::nextafter(d, std::numeric_limits<double>::infinity());
  return d;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Parses "[-]digits[.digits][e[-]digits]" exactly, or "p/q".
inline Rational parse_rational(std::string_view s) {
  auto fail = [&] { return std::invalid_argument("parse_rational: malformed '" + std::string(s) + "'"); };
  if (s.empty()) throw fail();
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Rational p = parse_rational(s.substr(0, slash));
    Rational q = parse_rational(s.substr(slash + 1));
    if (q == 0) throw std::domain_error("parse_rational: zero denominator");
    return p / q;
  }
  bool neg = false;
  std::size_t i = 0;
  if (s[i] == '+' || s[i] == '-') {
    neg = s[i] == '-';
    ++i;
  }
  BigInt digits = 0;
  int frac = 0;
  bool seen_dot = false;
  bool any = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c >= '0' && c <= '9') {
      digits = digits * 10 + (c - '0');
      any = true;
      if (seen_dot) ++frac;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else {
      break;
    }
  }
  if (!any) throw fail();
  int exp10 = -frac;
  if (i < s.size()) {
    if (s[i] != 'e' && s[i] != 'E') throw fail();
    std::string rest(s.substr(i + 1));
    std::size_t used = 0;
    int e = 0;
    try {
      e = std::stoi(rest, &used);
    } catch (const std::exception&) {
      throw fail();
    }
    if (used != rest.size()) throw fail();
    exp10 += e;
  }
  Rational r = exp10 >= 0 ? Rational(digits * pow10(static_cast<unsigned>(exp10)))
                          : Rational(digits, pow10(static_cast<unsigned>(-exp10)));
  return neg ? Rational(-r) : r;
}

inline std::string to_string(const Rational& r) {
  if (den(r) == 1) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}

// Fixed-point decimal rendering rounded toward -inf (down) or +inf (up).
inline std::string to_decimal(const Rational& r, unsigned digits, bool round_up) {
  BigInt scale = pow10(digits);
  BigInt q = round_up ? ceil(r * scale) : floor(r * scale);
  bool neg = q < 0;
  if (neg) q = -q;
  std::string s = q.str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  if (digits > 0) s.insert(s.size() - digits, ".");
  return neg ? "-" + s : s;
}

}  // namespace elsys::exact

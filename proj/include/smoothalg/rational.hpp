#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace smoothalg {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline Rational rat(long long n, long long d = 1) { return Rational(n, d); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline Rational rat_pow(const Rational& base, unsigned exp) {
  Rational acc(1);
  Rational b = base;
  unsigned e = exp;
  while (e > 0) {
    if (e & 1u) acc *= b;
    b *= b;
    e >>= 1u;
  }
  return acc;
}

inline Rational rat_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline std::string rat_to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += "/";
    s += denominator(r).str();
  }
  return s;
}

/// Parses "p" or "p/q" with optional leading '-'. Returns nullopt on junk.
inline std::optional<Rational> rat_from_string(std::string_view text) {
  if (text.empty()) return std::nullopt;
  size_t pos = 0;
  bool negative = false;
  if (text[pos] == '-') {
    negative = true;
    ++pos;
  }
  auto read_digits = [&](Integer& out) -> bool {
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) return false;
    out = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      out = out * 10 + (text[pos] - '0');
      ++pos;
    }
    return true;
  };
  Integer num;
  if (!read_digits(num)) return std::nullopt;
  Integer den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    if (!read_digits(den) || den == 0) return std::nullopt;
  }
  if (pos != text.size()) return std::nullopt;
  Rational r(num, den);
  return negative ? Rational(-r) : r;
}

/// Nearest-double conversion; the caller widens outward where soundness matters.
inline double rat_to_double(const Rational& r) {
  return r.convert_to<double>();
}

}  // namespace smoothalg

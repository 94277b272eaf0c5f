#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace kmhom {

// All arithmetic in the engine is exact. Rationals are arbitrary-precision;
// there is no floating point anywhere.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

inline bool is_nonnegative_integer(const Rational& q) {
  return is_integer(q) && q >= 0;
}

inline bool is_positive_integer(const Rational& q) {
  return is_integer(q) && q > 0;
}

/// Canonical text form: "p" for integers, "p/q" otherwise, sign on the
/// numerator. Used for all serialized rationals.
inline std::string rational_to_string(const Rational& q) {
  if (is_integer(q)) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

/// Strict parser for the serialized form: an optional leading '-', digits,
/// optionally followed by '/' and a positive integer. Decimals, whitespace
/// and signs on the denominator are rejected.
inline std::optional<Rational> parse_rational(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::size_t pos = 0;
  if (s[pos] == '-') ++pos;
  std::size_t num_begin = pos;
  while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
  if (pos == num_begin) return std::nullopt;
  std::string num(s.substr(0, pos));
  if (pos == s.size()) return Rational(BigInt(num));
  if (s[pos] != '/') return std::nullopt;
  ++pos;
  std::size_t den_begin = pos;
  while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
  if (pos != s.size() || pos == den_begin) return std::nullopt;
  std::string den(s.substr(den_begin));
  BigInt d(den);
  if (d == 0) return std::nullopt;
  return Rational(BigInt(num), d);
}

inline long long rational_to_int64(const Rational& q) {
  return static_cast<long long>(numerator(q));
}

}  // namespace kmhom

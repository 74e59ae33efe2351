#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace cobz {

// Arbitrary-precision integer used for strand/circle labels and exponents.
using Int = boost::multiprecision::cpp_int;

// Exact rational used by the matrix backend. Always stored reduced with a
// positive denominator (the boost backend canonicalizes on every operation).
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Int& n) { return n.str(); }

// Prints "p/q" when the denominator is not 1, otherwise just "p".
inline std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

// True iff s is a decimal integer literal: optional '-', then one or more digits.
inline bool is_integer_literal(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace cobz

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace dissect {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline int sign_of(const Rational& r) { return r.sign(); }

/// "p/q" for non-integers, plain "p" otherwise.
inline std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

/// True iff r is the square of a rational (both numerator and denominator
/// are perfect squares).
bool is_rational_square(const Rational& r, Rational* root = nullptr);

Rational parse_rational(const std::string& text);

}  // namespace dissect

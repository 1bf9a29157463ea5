#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace heyting {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const BigInt& num, const BigInt& den) { return Rational(num, den); }

inline std::string numerator_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str();
}

inline std::string denominator_string(const Rational& r) {
  return boost::multiprecision::denominator(r).str();
}

inline std::string to_string(const Rational& r) {
  auto den = boost::multiprecision::denominator(r);
  if (den == 1) return numerator_string(r);
  return numerator_string(r) + "/" + den.str();
}

/// b^e for a small non-negative exponent.
inline Rational rational_pow(const Rational& base, unsigned exponent) {
  Rational result = 1;
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace heyting

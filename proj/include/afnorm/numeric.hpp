#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace afnorm {

// Arbitrary-precision integers and rationals. Every computation in this
// library is exact; no floating point appears anywhere.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer abs_int(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline int sign_int(const Integer& a) { return a < 0 ? -1 : (a > 0 ? 1 : 0); }

// gcd(a, b) >= 0, gcd(0, 0) = 0.
inline Integer gcd_int(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Integer lcm_int(const Integer& a, const Integer& b) {
  return boost::multiprecision::lcm(a, b);
}

// Floored division and the matching nonnegative remainder.
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

inline Integer mod_positive(const Integer& a, const Integer& b) {
  Integer r = a % b;
  if (r < 0) r += abs_int(b);
  return r;
}

inline Rational abs_rat(const Rational& a) { return a < 0 ? Rational(-a) : a; }

}  // namespace afnorm

#pragma once

#include <string>
#include <vector>

#include "afnorm/numeric.hpp"

namespace afnorm {

// Euler's totient, by trial-division factorisation.
long euler_phi(long n);

// Coefficients of the n-th cyclotomic polynomial, ascending degree, monic.
// Computed as (x^n - 1) / prod_{d | n, d < n} Phi_d by exact division and
// memoized. Not thread-safe (the library computes single-threaded).
const std::vector<Integer>& cyclotomic_polynomial(long n);

// An element of the cyclotomic field Q(zeta_n), stored on the power basis
// 1, z, ..., z^(phi(n)-1) modulo Phi_n. Phi_n is irreducible over Q, so the
// representation is unique and every nonzero element is invertible.
//
// conductor 0 marks a plain rational not yet bound to a field; arithmetic
// promotes it to the other operand's conductor. Mixing two distinct nonzero
// conductors is a usage error and throws.
class Cyclotomic {
 public:
  Cyclotomic() : coeffs_(1) {}
  explicit Cyclotomic(const Rational& r) : coeffs_{r} {}
  explicit Cyclotomic(const Integer& n) : coeffs_{Rational(n)} {}

  // zeta_n^k reduced mod Phi_n (k may be any integer; taken mod n).
  static Cyclotomic root_of_unity(long n, const Integer& k);
  static Cyclotomic zero_in(long n);

  long conductor() const { return conductor_; }
  bool is_zero() const;
  bool is_rational() const;   // lies in Q (all basis coefficients above z^0 vanish)
  Rational rational_part() const;  // requires is_rational()

  Cyclotomic operator+(const Cyclotomic& rhs) const;
  Cyclotomic operator-(const Cyclotomic& rhs) const;
  Cyclotomic operator*(const Cyclotomic& rhs) const;
  Cyclotomic operator-() const;
  Cyclotomic inverse() const;  // throws on zero
  Cyclotomic operator/(const Cyclotomic& rhs) const;
  Cyclotomic& operator+=(const Cyclotomic& rhs) { return *this = *this + rhs; }
  Cyclotomic& operator-=(const Cyclotomic& rhs) { return *this = *this - rhs; }
  Cyclotomic& operator*=(const Cyclotomic& rhs) { return *this = *this * rhs; }

  bool operator==(const Cyclotomic& rhs) const;
  bool operator!=(const Cyclotomic& rhs) const { return !(*this == rhs); }

  const std::vector<Rational>& coefficients() const { return coeffs_; }

  // Polynomial in z, descending powers, e.g. "z^2 - 1/2*z + 3".
  std::string to_string() const;

 private:
  long conductor_ = 0;
  std::vector<Rational> coeffs_;

  void bind(long n);  // promote a conductor-0 value into Q(zeta_n)
  static void match(Cyclotomic& a, Cyclotomic& b);
  void reduce(std::vector<Rational>& raw) const;  // mod Phi_conductor
};

}  // namespace afnorm

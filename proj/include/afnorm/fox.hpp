#pragma once

#include <map>
#include <span>
#include <string>

#include "afnorm/free_word.hpp"
#include "afnorm/numeric.hpp"

namespace afnorm {

// An element of the integral group ring of a free group: a finite formal
// Z-linear combination of reduced words. Zero coefficients are never stored.
class FreeRingElem {
 public:
  FreeRingElem() = default;  // zero

  static FreeRingElem from_word(const FreeWord& w, Integer c = 1);
  static FreeRingElem one() { return from_word(FreeWord{}); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<FreeWord, Integer>& terms() const { return terms_; }

  FreeRingElem& operator+=(const FreeRingElem& rhs);
  FreeRingElem& operator-=(const FreeRingElem& rhs);
  FreeRingElem operator+(const FreeRingElem& rhs) const;
  FreeRingElem operator-(const FreeRingElem& rhs) const;
  FreeRingElem operator-() const;
  FreeRingElem operator*(const FreeRingElem& rhs) const;

  bool operator==(const FreeRingElem&) const = default;

  void add_term(const FreeWord& w, const Integer& c);

 private:
  std::map<FreeWord, Integer> terms_;
};

std::string ring_elem_to_string(const FreeRingElem& e, std::span<const Generator> gens);

// Fox derivative with respect to generator g, characterised by
//   d(x_g)/dx_g = 1,  d(x_h)/dx_g = 0 (h != g),  d(uv) = d(u) + u d(v).
// Powers expand in closed form: d(x^k)/dx = 1 + x + ... + x^(k-1) for k > 0
// and -(x^-1 + ... + x^k) for k < 0.
FreeRingElem fox_derivative(const FreeWord& f, int g);

// Checks the expansion f - 1 = sum_g (df/dx_g)(x_g - 1) for a word over
// generators 0..gen_count-1. Every word satisfies it; the check guards the
// derivative implementation.
bool fox_identity_holds(const FreeWord& f, int gen_count);

}  // namespace afnorm

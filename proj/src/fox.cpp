#include "afnorm/fox.hpp"

namespace afnorm {

FreeRingElem FreeRingElem::from_word(const FreeWord& w, Integer c) {
  FreeRingElem e;
  e.add_term(w, c);
  return e;
}

void FreeRingElem::add_term(const FreeWord& w, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

FreeRingElem& FreeRingElem::operator+=(const FreeRingElem& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_term(w, c);
  return *this;
}

FreeRingElem& FreeRingElem::operator-=(const FreeRingElem& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
  return *this;
}

FreeRingElem FreeRingElem::operator+(const FreeRingElem& rhs) const {
  FreeRingElem e = *this;
  e += rhs;
  return e;
}

FreeRingElem FreeRingElem::operator-(const FreeRingElem& rhs) const {
  FreeRingElem e = *this;
  e -= rhs;
  return e;
}

FreeRingElem FreeRingElem::operator-() const {
  FreeRingElem e;
  for (const auto& [w, c] : terms_) e.terms_.emplace(w, -c);
  return e;
}

FreeRingElem FreeRingElem::operator*(const FreeRingElem& rhs) const {
  FreeRingElem e;
  for (const auto& [wa, ca] : terms_)
    for (const auto& [wb, cb] : rhs.terms_) e.add_term(wa * wb, ca * cb);
  return e;
}

std::string ring_elem_to_string(const FreeRingElem& e, std::span<const Generator> gens) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : e.terms()) {
    Integer a = abs_int(c);
    if (out.empty()) {
      if (c < 0) out += '-';
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    if (a != 1 || w.is_identity()) out += a.str();
    if (!w.is_identity()) {
      if (a != 1) out += '*';
      out += '(' + word_to_string(w, gens) + ')';
    }
  }
  return out;
}

FreeRingElem fox_derivative(const FreeWord& f, int g) {
  FreeRingElem d;
  FreeWord prefix;
  for (const auto& s : f.syllables()) {
    if (s.generator == g) {
      if (s.exponent > 0) {
        for (long long a = 0; a < s.exponent; ++a)
          d.add_term(prefix * FreeWord::generator_power(g, a), 1);
      } else {
        for (long long a = 1; a <= -s.exponent; ++a)
          d.add_term(prefix * FreeWord::generator_power(g, -a), -1);
      }
    }
    prefix = prefix * FreeWord::generator_power(s.generator, s.exponent);
  }
  return d;
}

bool fox_identity_holds(const FreeWord& f, int gen_count) {
  FreeRingElem lhs = FreeRingElem::from_word(f) - FreeRingElem::one();
  FreeRingElem rhs;
  for (int g = 0; g < gen_count; ++g) {
    FreeRingElem factor = FreeRingElem::from_word(FreeWord::generator_power(g, 1)) -
                          FreeRingElem::one();
    rhs += fox_derivative(f, g) * factor;
  }
  return lhs == rhs;
}

}  // namespace afnorm

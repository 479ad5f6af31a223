#include "afnorm/free_word.hpp"

#include <cstdlib>
#include <stdexcept>

namespace afnorm {

FreeWord FreeWord::generator_power(int g, long long e) {
  FreeWord w;
  if (e != 0) w.syllables_.push_back({g, e});
  return w;
}

FreeWord FreeWord::from_syllables(const std::vector<Syllable>& raw) {
  FreeWord w;
  for (const Syllable& s : raw) {
    if (s.exponent == 0) continue;
    if (!w.syllables_.empty() && w.syllables_.back().generator == s.generator) {
      w.syllables_.back().exponent += s.exponent;
      if (w.syllables_.back().exponent == 0) w.syllables_.pop_back();
    } else {
      w.syllables_.push_back(s);
    }
  }
  return w;
}

long long FreeWord::length() const {
  long long n = 0;
  for (const Syllable& s : syllables_) n += std::llabs(s.exponent);
  return n;
}

int FreeWord::max_generator() const {
  int m = -1;
  for (const Syllable& s : syllables_) m = std::max(m, s.generator);
  return m;
}

FreeWord FreeWord::inverse() const {
  FreeWord w;
  w.syllables_.reserve(syllables_.size());
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it)
    w.syllables_.push_back({it->generator, -it->exponent});
  return w;
}

FreeWord FreeWord::operator*(const FreeWord& rhs) const {
  std::vector<Syllable> cat = syllables_;
  cat.insert(cat.end(), rhs.syllables_.begin(), rhs.syllables_.end());
  return from_syllables(cat);
}

FreeWord FreeWord::pow(long long k) const {
  if (k < 0) return inverse().pow(-k);
  FreeWord r;
  for (long long i = 0; i < k; ++i) r = r * *this;
  return r;
}

bool FreeWord::operator<(const FreeWord& rhs) const {
  long long la = length(), lb = rhs.length();
  if (la != lb) return la < lb;
  return syllables_ < rhs.syllables_;
}

long long generator_occurrences(const Presentation& p, int g) {
  long long n = 0;
  for (const FreeWord& r : p.relators)
    for (const auto& s : r.syllables())
      if (s.generator == g) n += std::llabs(s.exponent);
  return n;
}

std::string word_to_string(const FreeWord& w, std::span<const Generator> gens) {
  if (w.is_identity()) return "1";
  std::string out;
  for (const auto& s : w.syllables()) {
    if (!out.empty()) out += ' ';
    if (s.generator < 0 || s.generator >= static_cast<int>(gens.size()))
      throw std::out_of_range("word uses a generator outside the presentation");
    out += gens[s.generator].name;
    if (s.exponent != 1) out += '^' + std::to_string(s.exponent);
  }
  return out;
}

std::string presentation_to_string(const Presentation& p) {
  std::string out = "<";
  for (int i = 0; i < p.generator_count(); ++i) {
    out += i ? ", " : " ";
    out += p.generators[i].name;
  }
  out += " |";
  for (int i = 0; i < p.relator_count(); ++i) {
    out += i ? ", " : " ";
    out += word_to_string(p.relators[i], p.generators);
  }
  out += " >";
  return out;
}

}  // namespace afnorm

#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace afnorm {

struct Generator {
  int index = 0;      // position in the presentation's generator list
  std::string name;   // identifier as written in the input
};

// A reduced word in a free group. Stored as syllables (generator, exponent)
// with nonzero exponents and no two consecutive syllables on the same
// generator. The identity is the empty syllable list.
class FreeWord {
 public:
  struct Syllable {
    int generator = 0;
    long long exponent = 0;
    friend auto operator<=>(const Syllable&, const Syllable&) = default;
  };

  FreeWord() = default;

  // Single-syllable word x_g^e (identity when e == 0).
  static FreeWord generator_power(int g, long long e);
  // Reduce an arbitrary syllable list (merges neighbours, drops zeros).
  static FreeWord from_syllables(const std::vector<Syllable>& raw);

  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool is_identity() const { return syllables_.empty(); }
  // Word length = sum of |exponent|.
  long long length() const;
  // Largest generator index used, or -1 for the identity.
  int max_generator() const;

  FreeWord inverse() const;
  FreeWord operator*(const FreeWord& rhs) const;
  FreeWord pow(long long k) const;

  bool operator==(const FreeWord&) const = default;
  // Canonical total order: by length, then lexicographic on syllables.
  // Used as the map key order in group-ring elements and for printing.
  bool operator<(const FreeWord& rhs) const;

 private:
  std::vector<Syllable> syllables_;
};

struct Presentation {
  std::vector<Generator> generators;
  std::vector<FreeWord> relators;

  int generator_count() const { return static_cast<int>(generators.size()); }
  int relator_count() const { return static_cast<int>(relators.size()); }
};

// Total number of occurrences of generator g in the relators of p, counting
// multiplicity: a syllable x_g^e contributes |e|.
long long generator_occurrences(const Presentation& p, int g);

std::string word_to_string(const FreeWord& w, std::span<const Generator> gens);
std::string presentation_to_string(const Presentation& p);

}  // namespace afnorm

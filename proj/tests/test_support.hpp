#pragma once

#include <random>
#include <vector>

#include "afnorm/free_word.hpp"

namespace afnorm::testing {

// Deterministic random words/presentations for property tests. All seeds
// are fixed at the call sites so failures reproduce exactly.
inline FreeWord random_word(std::mt19937& rng, int gens, int max_syllables, int max_exp = 3) {
  std::uniform_int_distribution<int> count(0, max_syllables);
  std::uniform_int_distribution<int> gen(0, gens - 1);
  std::uniform_int_distribution<int> exp(-max_exp, max_exp);
  std::vector<FreeWord::Syllable> syl;
  int n = count(rng);
  for (int i = 0; i < n; ++i) {
    int e = exp(rng);
    if (e == 0) e = 1;
    syl.push_back({gen(rng), e});
  }
  return FreeWord::from_syllables(syl);
}

inline Presentation random_presentation(std::mt19937& rng, int gens, int relators,
                                        int max_syllables) {
  Presentation p;
  for (int i = 0; i < gens; ++i) p.generators.push_back({i, std::string(1, char('a' + i))});
  for (int j = 0; j < relators; ++j) {
    FreeWord w = random_word(rng, gens, max_syllables);
    p.relators.push_back(w);
  }
  return p;
}

}  // namespace afnorm::testing

#pragma once

#include <vector>

#include "afnorm/cyclotomic.hpp"
#include "afnorm/free_word.hpp"
#include "afnorm/intmat.hpp"
#include "afnorm/numeric.hpp"

namespace afnorm {

// First homology H of a presentation, split as (torsion) x Z^free_rank.
// `to_h` is the unimodular change of basis from the SNF of the relator
// exponent matrix: the class of a word with exponent-sum vector e has
// coordinates (to_h * e), read off row-wise. torsion_rows[k] is the row
// giving the Z/d_k coordinate (d_k = invariant_factors[k], chained by
// divisibility); free_rows give the Z^free_rank coordinates, in a basis
// fixed deterministically by flipping each free row so its first nonzero
// entry is positive.
struct AbelianStructure {
  int generator_count = 0;
  std::vector<Integer> invariant_factors;  // each >= 2, d_k | d_{k+1}
  int free_rank = 0;
  IntMat to_h;
  std::vector<int> torsion_rows;
  std::vector<int> free_rows;
  long conductor = 1;  // lcm of the invariant factors (1 when torsion-free)
};

AbelianStructure abelianize(const Presentation& p);

// Coordinates of a homology class: torsion entries reduced into [0, d_k).
struct HClass {
  std::vector<Integer> torsion;
  std::vector<Integer> free_part;
};

HClass class_of_word(const AbelianStructure& h, const FreeWord& w);

// A character of the torsion subgroup, as exponents a_k in [0, d_k): it
// sends the k-th torsion basis element to zeta_N^(a_k * N / d_k), N the
// conductor.
struct Character {
  std::vector<Integer> exponents;

  bool is_trivial() const {
    for (const Integer& a : exponents)
      if (a != 0) return false;
    return true;
  }
  bool operator==(const Character&) const = default;
};

// Number of characters = product of the invariant factors.
Integer character_count(const AbelianStructure& h);

// All characters in lexicographic exponent order; the trivial character
// comes first. Size is character_count(h) — callers guard against blowup.
std::vector<Character> all_characters(const AbelianStructure& h);

// Value of the character on a torsion coordinate tuple, as an exact root
// of unity in Q(zeta_conductor).
Cyclotomic character_value(const AbelianStructure& h, const Character& chi,
                           const std::vector<Integer>& torsion);

}  // namespace afnorm

#pragma once

#include <vector>

#include "afnorm/alexander.hpp"
#include "afnorm/errors.hpp"

namespace afnorm {

// Span of the polynomial in the direction of the class: the seminorm on
// 1-cohomology induced by a (possibly twisted) Alexander polynomial.
template <class C>
Integer alexander_norm(const LaurentPoly<C>& delta, const std::vector<Integer>& cls) {
  return span(delta, cls);
}

// |cls| when the free rank is exactly one, otherwise 0. This is the
// correction term subtracted from the trivial-character norm.
Integer rank_one_norm(int free_rank, const std::vector<Integer>& cls);

// Weighted L1 norm of the class on the presentation complex: each
// generator contributes (occurrences/2 - 1) * |value of cls on it|.
// Requires every generator to appear at least twice in the relators
// (weights stay nonnegative); throws DomainError otherwise.
Rational presentation_complex_norm(const Presentation& p, const AbelianStructure& h,
                                   const std::vector<Integer>& cls);

// Everything fixed by the presentation alone, reusable across classes.
struct NormContext {
  Presentation p;
  AbelianStructure h;
  AlexanderMatrix a;
  std::vector<Character> characters;  // trivial character first
  std::vector<CycLaurent> deltas;     // twisted polynomials, aligned
  IntLaurent delta_integer;           // untwisted polynomial over Z
};

// Throws ResourceError when the character group is larger than
// max_characters.
NormContext make_norm_context(const Presentation& p, const Integer& max_characters = 4096);

struct CharacterTerm {
  Character chi;
  Integer norm;     // span of the character's polynomial along cls
  Integer penalty;  // rank_one_norm for the trivial character, else 0
};

// The comparison between the presentation-complex norm and the best
// polynomial bound: lhs >= rhs always; equality certifies that no
// presentation of the same group can do better on this class.
struct InequalityReport {
  std::vector<Integer> cls;
  Rational lhs;
  std::vector<CharacterTerm> terms;
  Integer rank_one;
  Rational rhs;  // max over terms of (norm - penalty); can be negative
  bool holds = false;
  bool equality = false;
};

InequalityReport verify_inequality(const NormContext& ctx, const std::vector<Integer>& cls);

}  // namespace afnorm

#include "afnorm/norms.hpp"

namespace afnorm {

Integer rank_one_norm(int free_rank, const std::vector<Integer>& cls) {
  if (free_rank != 1) return 0;
  return abs_int(cls[0]);
}

Rational presentation_complex_norm(const Presentation& p, const AbelianStructure& h,
                                   const std::vector<Integer>& cls) {
  if (static_cast<int>(cls.size()) != h.free_rank)
    throw DomainError("class length must equal the free rank");
  Rational total(0);
  for (int i = 0; i < p.generator_count(); ++i) {
    long long occ = generator_occurrences(p, i);
    if (occ < 2)
      throw DomainError("generator '" + p.generators[i].name +
                        "' appears fewer than twice in the relators");
    HClass c = class_of_word(h, FreeWord::generator_power(i, 1));
    Integer value(0);
    for (size_t k = 0; k < cls.size(); ++k) value += cls[k] * c.free_part[k];
    total += Rational(occ - 2, 2) * Rational(abs_int(value));
  }
  return total;
}

NormContext make_norm_context(const Presentation& p, const Integer& max_characters) {
  NormContext ctx;
  ctx.p = p;
  ctx.h = abelianize(p);
  ctx.a = alexander_matrix(p, ctx.h);
  if (character_count(ctx.h) > max_characters)
    throw ResourceError("character group too large (" + character_count(ctx.h).str() +
                        " characters)");
  ctx.characters = all_characters(ctx.h);
  ctx.deltas.reserve(ctx.characters.size());
  for (const Character& chi : ctx.characters)
    ctx.deltas.push_back(alexander_poly(ctx.a, ctx.h, chi));
  ctx.delta_integer = alexander_poly(ctx.a, ctx.h);
  return ctx;
}

InequalityReport verify_inequality(const NormContext& ctx, const std::vector<Integer>& cls) {
  InequalityReport rep;
  rep.cls = cls;
  rep.lhs = presentation_complex_norm(ctx.p, ctx.h, cls);
  rep.rank_one = rank_one_norm(ctx.h.free_rank, cls);

  bool first = true;
  Integer best(0);
  for (size_t i = 0; i < ctx.characters.size(); ++i) {
    CharacterTerm term;
    term.chi = ctx.characters[i];
    // The trivial character's polynomial lives over Z; the twisted one over
    // Q(zeta_N) differs from it only by content, so the span agrees. Use
    // the integer polynomial to keep the untwisted path authoritative.
    term.norm = term.chi.is_trivial() ? alexander_norm(ctx.delta_integer, cls)
                                      : alexander_norm(ctx.deltas[i], cls);
    term.penalty = term.chi.is_trivial() ? rep.rank_one : Integer(0);
    Integer value = term.norm - term.penalty;
    if (first || value > best) {
      best = value;
      first = false;
    }
    rep.terms.push_back(std::move(term));
  }
  rep.rhs = Rational(best);
  rep.holds = rep.lhs >= rep.rhs;
  rep.equality = rep.lhs == rep.rhs;
  return rep;
}

}  // namespace afnorm

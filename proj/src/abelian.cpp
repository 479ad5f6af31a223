#include "afnorm/abelian.hpp"

#include <stdexcept>

namespace afnorm {

AbelianStructure abelianize(const Presentation& p) {
  const int m = p.generator_count();
  const int n = p.relator_count();

  IntMat rel(m, n);
  for (int j = 0; j < n; ++j)
    for (const auto& s : p.relators[j].syllables()) rel.at(s.generator, j) += s.exponent;

  SmithForm snf = smith_normal_form(rel);

  AbelianStructure h;
  h.generator_count = m;
  h.to_h = snf.u;
  const int diag = static_cast<int>(snf.diagonal.size());
  for (int t = 0; t < m; ++t) {
    if (t < diag && snf.diagonal[t] == 1) continue;  // dead coordinate
    if (t < diag && snf.diagonal[t] != 0) {
      h.invariant_factors.push_back(snf.diagonal[t]);
      h.torsion_rows.push_back(t);
    } else {
      h.free_rows.push_back(t);
    }
  }
  h.free_rank = static_cast<int>(h.free_rows.size());

  // Deterministic free basis: flip each free row of U so its first nonzero
  // entry (first generator with nonzero image) is positive. The matching
  // rows of D are zero, so U*M*V = D survives the flip.
  for (int row : h.free_rows) {
    int lead = -1;
    for (int j = 0; j < m; ++j)
      if (h.to_h.at(row, j) != 0) {
        lead = j;
        break;
      }
    if (lead >= 0 && h.to_h.at(row, lead) < 0)
      for (int j = 0; j < m; ++j) h.to_h.at(row, j) = -h.to_h.at(row, j);
  }

  Integer lcm(1);
  for (const Integer& d : h.invariant_factors) lcm = lcm_int(lcm, d);
  if (lcm > 1000000)
    throw std::overflow_error("torsion conductor too large for cyclotomic arithmetic");
  h.conductor = static_cast<long>(lcm);
  return h;
}

HClass class_of_word(const AbelianStructure& h, const FreeWord& w) {
  const int m = h.generator_count;
  std::vector<Integer> e(m);
  for (const auto& s : w.syllables()) {
    if (s.generator >= m)
      throw std::out_of_range("word uses a generator outside the presentation");
    e[s.generator] += s.exponent;
  }
  std::vector<Integer> y(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) y[i] += h.to_h.at(i, j) * e[j];

  HClass c;
  for (size_t k = 0; k < h.torsion_rows.size(); ++k)
    c.torsion.push_back(mod_positive(y[h.torsion_rows[k]], h.invariant_factors[k]));
  for (int row : h.free_rows) c.free_part.push_back(y[row]);
  return c;
}

Integer character_count(const AbelianStructure& h) {
  Integer n(1);
  for (const Integer& d : h.invariant_factors) n *= d;
  return n;
}

std::vector<Character> all_characters(const AbelianStructure& h) {
  std::vector<Character> out;
  Character chi;
  chi.exponents.assign(h.invariant_factors.size(), Integer(0));
  for (;;) {
    out.push_back(chi);
    // Odometer in lexicographic order: increment from the last position.
    size_t k = chi.exponents.size();
    while (k-- > 0) {
      if (++chi.exponents[k] < h.invariant_factors[k]) break;
      chi.exponents[k] = 0;
      if (k == 0) return out;
    }
    if (chi.exponents.empty()) return out;
  }
}

Cyclotomic character_value(const AbelianStructure& h, const Character& chi,
                           const std::vector<Integer>& torsion) {
  if (chi.exponents.size() != h.invariant_factors.size() ||
      torsion.size() != h.invariant_factors.size())
    throw std::invalid_argument("character/torsion arity mismatch");
  Integer n(h.conductor);
  Integer e(0);
  for (size_t k = 0; k < torsion.size(); ++k)
    e += chi.exponents[k] * torsion[k] * (n / h.invariant_factors[k]);
  return Cyclotomic::root_of_unity(h.conductor, e);
}

}  // namespace afnorm

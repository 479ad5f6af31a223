#include "afnorm/alexander.hpp"

#include <set>

namespace afnorm {

namespace {

HMonomial monomial_of_class(const HClass& c) { return HMonomial{c.torsion, c.free_part}; }

Integer collapse(const std::vector<Integer>& cls, const Monomial& g) {
  Integer dot(0);
  for (size_t i = 0; i < cls.size(); ++i) dot += cls[i] * g[i];
  return dot;
}

}  // namespace

HRingElem image_in_h(const FreeRingElem& e, const AbelianStructure& h) {
  HRingElem out;
  for (const auto& [w, c] : e.terms()) out.add_term(monomial_of_class(class_of_word(h, w)), c);
  return out;
}

AlexanderMatrix alexander_matrix(const Presentation& p, const AbelianStructure& h) {
  AlexanderMatrix a;
  a.cols = p.generator_count();
  a.rows = std::max(p.relator_count(), p.generator_count());
  a.entries.assign(a.rows, std::vector<HRingElem>(a.cols));
  for (int j = 0; j < p.relator_count(); ++j)
    for (int i = 0; i < a.cols; ++i)
      a.entries[j][i] = image_in_h(fox_derivative(p.relators[j], i), h);
  return a;
}

IntLaurent project_free(const HRingElem& e, const AbelianStructure& h) {
  IntLaurent p(h.free_rank);
  for (const auto& [m, c] : e.terms()) p.add_term(m.free_part, c);
  return p;
}

CycLaurent apply_character(const HRingElem& e, const AbelianStructure& h, const Character& chi) {
  CycLaurent p(h.free_rank);
  for (const auto& [m, c] : e.terms())
    p.add_term(m.free_part, character_value(h, chi, m.torsion) * Cyclotomic(c));
  return p;
}

CycLaurent specialize_elem(const HRingElem& e, const AbelianStructure& h, const Character& chi,
                           const std::vector<Integer>& cls) {
  CycLaurent p(1);
  for (const auto& [m, c] : e.terms())
    p.add_term(Monomial{collapse(cls, m.free_part)},
               character_value(h, chi, m.torsion) * Cyclotomic(c));
  return p;
}

namespace {

template <class C, class MapEntry>
std::vector<std::vector<LaurentPoly<C>>> mapped_matrix(const AlexanderMatrix& a,
                                                       MapEntry&& map_entry) {
  std::vector<std::vector<LaurentPoly<C>>> m(a.rows);
  for (int i = 0; i < a.rows; ++i) {
    m[i].reserve(a.cols);
    for (int j = 0; j < a.cols; ++j) m[i].push_back(map_entry(a.entries[i][j]));
  }
  return m;
}

}  // namespace

std::vector<IntLaurent> elementary_ideal(const AlexanderMatrix& a, const AbelianStructure& h,
                                         int d) {
  auto mat = mapped_matrix<Integer>(a, [&](const HRingElem& e) { return project_free(e, h); });
  return minor_ideal(mat, a.cols - d, h.free_rank);
}

std::vector<CycLaurent> elementary_ideal(const AlexanderMatrix& a, const AbelianStructure& h,
                                         const Character& chi, int d) {
  auto mat =
      mapped_matrix<Cyclotomic>(a, [&](const HRingElem& e) { return apply_character(e, h, chi); });
  return minor_ideal(mat, a.cols - d, h.free_rank);
}

IntLaurent alexander_poly(const AlexanderMatrix& a, const AbelianStructure& h) {
  return gcd_list(elementary_ideal(a, h, 1), h.free_rank);
}

CycLaurent alexander_poly(const AlexanderMatrix& a, const AbelianStructure& h,
                          const Character& chi) {
  return gcd_list(elementary_ideal(a, h, chi, 1), h.free_rank);
}

CycLaurent specialized_gcd(const AlexanderMatrix& a, const AbelianStructure& h,
                           const Character& chi, const std::vector<Integer>& cls) {
  auto mat = mapped_matrix<Cyclotomic>(
      a, [&](const HRingElem& e) { return specialize_elem(e, h, chi, cls); });
  return gcd_list(minor_ideal(mat, a.cols - 1, 1), 1);
}

namespace {

// Is <cls, -> injective on the free parts of the support?
template <class C>
bool injective_on_support(const LaurentPoly<C>& p, const std::vector<Integer>& cls) {
  std::set<Integer> seen;
  for (const auto& [m, c] : p.terms())
    if (!seen.insert(collapse(cls, m)).second) return false;
  return true;
}

}  // namespace

SpecializationCheck check_specialization(const AlexanderMatrix& a, const AbelianStructure& h,
                                         const Character& chi, const std::vector<Integer>& cls) {
  SpecializationCheck out;
  out.delta = alexander_poly(a, h, chi);
  out.delta_exponent = (chi.is_trivial() && h.free_rank >= 2) ? 1 : 0;

  Integer content(0);
  for (const Integer& s : cls) content = gcd_int(content, s);
  out.primitive = (content == 1);

  if (out.delta.is_zero()) {
    out.delta_zero = true;
    return out;
  }
  out.span_delta = span(out.delta, cls);

  std::vector<CycLaurent> ideal = elementary_ideal(a, h, chi, 1);
  bool witness = false;
  for (const CycLaurent& g : ideal)
    if (!g.is_zero() && injective_on_support(g, cls)) {
      witness = true;
      break;
    }
  out.regular = witness && injective_on_support(out.delta, cls);
  out.applicable = out.primitive && out.regular;

  out.specialized = specialized_gcd(a, h, chi, cls);
  out.span_specialized = span(out.specialized, {Integer(1)});

  // (t - 1)^e * image of delta under g -> t^<cls, g>.
  CycLaurent image(1);
  for (const auto& [m, c] : out.delta.terms()) image.add_term(Monomial{collapse(cls, m)}, c);
  CycLaurent t_minus_1(1);
  t_minus_1.add_term(Monomial{Integer(1)}, Cyclotomic(Integer(1)));
  t_minus_1.add_term(Monomial{Integer(0)}, Cyclotomic(Integer(-1)));
  for (int i = 0; i < out.delta_exponent; ++i) image = image * t_minus_1;
  out.expected_divisor = std::move(image);

  out.span_ok = out.span_specialized >= Integer(out.delta_exponent) + out.span_delta;
  out.divisible = try_divide_exact(out.specialized, out.expected_divisor).has_value();
  return out;
}

}  // namespace afnorm

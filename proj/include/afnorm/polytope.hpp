#pragma once

#include <vector>

#include "afnorm/laurent.hpp"

namespace afnorm {

// Vertices of conv{ (g - h)/2 : g, h in `support` }: the symmetric
// difference body of the support, scaled by 1/2. Coordinates are exact
// rationals (half-integers); vertices are sorted lexicographically. An
// empty support and a single monomial both give the single vertex 0.
// Vertex certification is exact: a candidate is a vertex iff it is not a
// convex combination of the other difference points (an LP feasibility
// question solved with the rational simplex).
std::vector<std::vector<Rational>> polytope_vertices(const std::vector<Monomial>& support,
                                                     int rank);

template <class C>
std::vector<std::vector<Rational>> newton_polytope(const LaurentPoly<C>& p) {
  std::vector<Monomial> support;
  support.reserve(p.term_count());
  for (const auto& [m, c] : p.terms()) support.push_back(m);
  return polytope_vertices(support, p.rank());
}

}  // namespace afnorm

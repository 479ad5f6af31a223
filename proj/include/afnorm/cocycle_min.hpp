#pragma once

#include "afnorm/cw_complex.hpp"

namespace afnorm {

// Result of norm minimization over the cohomology class of a cocycle:
// the minimizing cocycle k0 + d(potential), its norm, and the integer
// potential realizing it (zero on boundary vertices).
struct MinimizeResult {
  Rational value;
  Cocycle minimizer;
  std::map<std::string, Integer> potential;
};

// Minimizes cocycle_norm over all integer cochains cohomologous to k0
// relative to the boundary: k = k0 + d(c) with c a vertex potential
// vanishing on boundary vertices and d(c)(e) = c(head) - c(tail).
//
// Solved as an exact rational LP (min sum w_e t_e with t_e >= |k(e)|,
// epigraph split into two inequalities per edge) whose optimal basic
// solutions are integral here; integrality of the returned potential and
// minimizer is certified, not assumed. Requires is_cocycle(c, info, k0).
MinimizeResult minimize_norm(const Complex2& c, const ComplexInfo& info, const Cocycle& k0);

// Reference implementation by exhaustion: tries every integer potential
// with |c(v)| <= box on non-boundary vertices and returns the best norm.
// A box of sum_e |k0(e)| is always large enough to contain an optimum.
// Throws ResourceError when the search space exceeds ~10^7 points.
Rational brute_force_min(const Complex2& c, const ComplexInfo& info, const Cocycle& k0,
                         const Integer& box);

}  // namespace afnorm

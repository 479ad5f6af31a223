#pragma once

#include <vector>

#include "afnorm/numeric.hpp"

namespace afnorm {

// Linear program in equality standard form:
//   minimize objective . x   subject to   rows x = rhs,  x >= 0.
struct LpProblem {
  int num_vars = 0;
  std::vector<std::vector<Rational>> rows;  // each of length num_vars
  std::vector<Rational> rhs;                // one per row
  std::vector<Rational> objective;          // length num_vars

  void add_row(std::vector<Rational> row, Rational b) {
    rows.push_back(std::move(row));
    rhs.push_back(std::move(b));
  }
};

struct LpSolution {
  bool feasible = false;
  bool bounded = true;
  Rational value;           // optimal objective, when feasible && bounded
  std::vector<Rational> x;  // an optimal basic solution
};

// Exact two-phase primal simplex over the rationals with Bland's pivoting
// rule (smallest eligible index), which excludes cycling. No floating
// point, no tolerances: results are exact.
LpSolution lp_solve_min(const LpProblem& p);

// Feasibility of {rows x = rhs, x >= 0} (phase 1 only).
bool lp_feasible(const LpProblem& p);

}  // namespace afnorm

#include "afnorm/simplex.hpp"

#include <stdexcept>

namespace afnorm {

namespace {

// Dense simplex tableau. Columns 0..n-1 are variables, column n is the
// right-hand side; row m is the objective row (reduced costs, with -value
// in the rhs cell). basis[i] is the variable owning row i.
struct Tableau {
  int m = 0, n = 0;
  std::vector<std::vector<Rational>> t;
  std::vector<int> basis;

  Rational& at(int i, int j) { return t[i][j]; }

  void pivot(int row, int col) {
    Rational p = t[row][col];
    for (int j = 0; j <= n; ++j) t[row][j] /= p;
    for (int i = 0; i <= m; ++i) {
      if (i == row) continue;
      Rational f = t[i][col];
      if (f == 0) continue;
      for (int j = 0; j <= n; ++j) t[i][j] -= f * t[row][j];
    }
    basis[row] = col;
  }

  // One round of Bland's rule. Returns 0 when optimal, 1 after a pivot,
  // -1 when the entering column proves the problem unbounded.
  int step() {
    int col = -1;
    for (int j = 0; j < n; ++j)
      if (t[m][j] < 0) {
        col = j;
        break;
      }
    if (col < 0) return 0;
    int row = -1;
    for (int i = 0; i < m; ++i) {
      if (t[i][col] <= 0) continue;
      if (row < 0) {
        row = i;
        continue;
      }
      Rational lhs = t[i][n] * t[row][col];
      Rational rhs = t[row][n] * t[i][col];
      if (lhs < rhs || (lhs == rhs && basis[i] < basis[row])) row = i;
    }
    if (row < 0) return -1;
    pivot(row, col);
    return 1;
  }
};

}  // namespace

static LpSolution solve(const LpProblem& p, bool phase1_only) {
  const int m = static_cast<int>(p.rows.size());
  const int n = p.num_vars;
  for (const auto& row : p.rows)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("lp row length mismatch");
  if (static_cast<int>(p.objective.size()) != n && !phase1_only)
    throw std::invalid_argument("lp objective length mismatch");

  // Phase 1: minimize the sum of one artificial variable per row.
  Tableau tab;
  tab.m = m;
  tab.n = n + m;
  tab.t.assign(m + 1, std::vector<Rational>(tab.n + 1, Rational(0)));
  tab.basis.resize(m);
  for (int i = 0; i < m; ++i) {
    bool flip = p.rhs[i] < 0;
    for (int j = 0; j < n; ++j) tab.at(i, j) = flip ? Rational(-p.rows[i][j]) : p.rows[i][j];
    tab.at(i, tab.n) = flip ? Rational(-p.rhs[i]) : p.rhs[i];
    tab.at(i, n + i) = 1;
    tab.basis[i] = n + i;
  }
  // Objective row for sum of artificials, expressed in nonbasic columns:
  // subtract every constraint row.
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= tab.n; ++j)
      if (j < n || j == tab.n) tab.at(m, j) -= tab.at(i, j);

  while (tab.step() == 1) {
  }
  LpSolution sol;
  if (tab.at(m, tab.n) != 0) {  // -value != 0  =>  infeasible
    sol.feasible = false;
    return sol;
  }
  sol.feasible = true;
  if (phase1_only) return sol;

  // Drive any artificial variables still basic (at value zero) out of the
  // basis; a row with no real pivot column is redundant and inert.
  for (int i = 0; i < m; ++i) {
    if (tab.basis[i] < n) continue;
    for (int j = 0; j < n; ++j)
      if (tab.at(i, j) != 0) {
        tab.pivot(i, j);
        break;
      }
  }

  // Phase 2: swap in the real objective, priced out over the basis.
  for (int j = 0; j <= tab.n; ++j) tab.at(m, j) = 0;
  for (int j = 0; j < n; ++j) tab.at(m, j) = p.objective[j];
  for (int i = 0; i < m; ++i) {
    if (tab.basis[i] >= n) continue;  // artificial stuck in a redundant row
    Rational c = p.objective[tab.basis[i]];
    if (c == 0) continue;
    for (int j = 0; j <= tab.n; ++j) tab.at(m, j) -= c * tab.t[i][j];
  }
  // Forbid re-entering artificial columns.
  for (int i = 0; i < m; ++i)
    for (int jj = n; jj < tab.n; ++jj) tab.t[i][jj] = 0;
  for (int jj = n; jj < tab.n; ++jj) tab.t[m][jj] = 0;

  int state;
  while ((state = tab.step()) == 1) {
  }
  if (state == -1) {
    sol.bounded = false;
    return sol;
  }
  sol.x.assign(n, Rational(0));
  for (int i = 0; i < m; ++i)
    if (tab.basis[i] < n) sol.x[tab.basis[i]] = tab.at(i, tab.n);
  sol.value = -tab.at(m, tab.n);
  return sol;
}

LpSolution lp_solve_min(const LpProblem& p) { return solve(p, false); }

bool lp_feasible(const LpProblem& p) { return solve(p, true).feasible; }

}  // namespace afnorm

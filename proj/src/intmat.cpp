#include "afnorm/intmat.hpp"

#include <stdexcept>
#include <utility>

namespace afnorm {

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::operator*(const IntMat& rhs) const {
  if (cols != rhs.rows) throw std::invalid_argument("matrix shape mismatch");
  IntMat out(rows, rhs.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const Integer& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < rhs.cols; ++j) out.at(i, j) += x * rhs.at(k, j);
    }
  return out;
}

namespace {

void swap_rows(IntMat& m, int i, int j) {
  if (i == j) return;
  for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}

void swap_cols(IntMat& m, int i, int j) {
  if (i == j) return;
  for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
}

// row[dst] += q * row[src]
void add_row(IntMat& m, int dst, int src, const Integer& q) {
  for (int c = 0; c < m.cols; ++c) m.at(dst, c) += q * m.at(src, c);
}

void add_col(IntMat& m, int dst, int src, const Integer& q) {
  for (int r = 0; r < m.rows; ++r) m.at(r, dst) += q * m.at(r, src);
}

}  // namespace

SmithForm smith_normal_form(const IntMat& m) {
  SmithForm s;
  s.u = IntMat::identity(m.rows);
  s.v = IntMat::identity(m.cols);
  s.d = m;
  IntMat& d = s.d;
  const int steps = std::min(m.rows, m.cols);

  for (int t = 0; t < steps; ++t) {
    for (;;) {
      // Pivot: smallest nonzero |entry| in the trailing submatrix, ties
      // resolved row-major, moved to (t, t).
      int pi = -1, pj = -1;
      for (int i = t; i < d.rows; ++i)
        for (int j = t; j < d.cols; ++j) {
          if (d.at(i, j) == 0) continue;
          if (pi < 0 || abs_int(d.at(i, j)) < abs_int(d.at(pi, pj))) {
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) {
        t = steps;  // trailing submatrix is zero; done
        break;
      }
      swap_rows(d, t, pi);
      swap_rows(s.u, t, pi);
      swap_cols(d, t, pj);
      swap_cols(s.v, t, pj);

      // Clear column t below the pivot, then row t to its right. A nonzero
      // remainder is strictly smaller than the pivot, so restarting the
      // pivot search makes progress.
      bool clean = true;
      for (int i = t + 1; i < d.rows; ++i) {
        if (d.at(i, t) == 0) continue;
        Integer q = d.at(i, t) / d.at(t, t);
        add_row(d, i, t, -q);
        add_row(s.u, i, t, -q);
        if (d.at(i, t) != 0) clean = false;
      }
      if (!clean) continue;
      for (int j = t + 1; j < d.cols; ++j) {
        if (d.at(t, j) == 0) continue;
        Integer q = d.at(t, j) / d.at(t, t);
        add_col(d, j, t, -q);
        add_col(s.v, j, t, -q);
        if (d.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility sweep: the pivot must divide every remaining entry so
      // the diagonal forms a chain d_1 | d_2 | ... Folding an offending row
      // into row t exposes the obstruction to the elimination above.
      int bad = -1;
      for (int i = t + 1; i < d.rows && bad < 0; ++i)
        for (int j = t + 1; j < d.cols; ++j)
          if (d.at(i, j) % d.at(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad >= 0) {
        add_row(d, t, bad, 1);
        add_row(s.u, t, bad, 1);
        continue;
      }
      break;
    }
    if (t >= steps) break;
  }

  for (int t = 0; t < steps; ++t) {
    if (d.at(t, t) < 0) {
      for (int c = 0; c < d.cols; ++c) d.at(t, c) = -d.at(t, c);
      for (int c = 0; c < s.u.cols; ++c) s.u.at(t, c) = -s.u.at(t, c);
    }
    s.diagonal.push_back(d.at(t, t));
    if (d.at(t, t) != 0) ++s.rank;
  }
  return s;
}

Integer determinant(const IntMat& m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant of non-square matrix");
  const int n = m.rows;
  if (n == 0) return 1;
  IntMat w = m;
  int sign = 1;
  Integer prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (w.at(k, k) == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i)
        if (w.at(i, k) != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return 0;
      swap_rows(w, k, swap);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
    prev = w.at(k, k);
  }
  return sign > 0 ? w.at(n - 1, n - 1) : Integer(-w.at(n - 1, n - 1));
}

}  // namespace afnorm

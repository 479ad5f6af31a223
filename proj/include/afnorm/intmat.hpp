#pragma once

#include <vector>

#include "afnorm/numeric.hpp"

namespace afnorm {

// Dense matrix over Z.
struct IntMat {
  int rows = 0, cols = 0;
  std::vector<Integer> a;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  static IntMat identity(int n);

  Integer& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Integer& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  IntMat operator*(const IntMat& rhs) const;
  bool operator==(const IntMat&) const = default;
};

// Smith normal form U * M * V = D with U, V unimodular and D diagonal,
// diagonal[k] >= 0 and diagonal[k] | diagonal[k+1].
struct SmithForm {
  IntMat u, d, v;
  std::vector<Integer> diagonal;  // min(rows, cols) entries of D
  int rank = 0;                   // number of nonzero diagonal entries
};

SmithForm smith_normal_form(const IntMat& m);

// Exact determinant (Bareiss fraction-free elimination).
Integer determinant(const IntMat& m);

}  // namespace afnorm

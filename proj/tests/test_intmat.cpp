#include <doctest.h>

#include <random>

#include "afnorm/intmat.hpp"

using namespace afnorm;

namespace {

IntMat from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
  IntMat m(static_cast<int>(rows.size()),
           rows.size() ? static_cast<int>(rows.begin()->size()) : 0);
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (long long v : row) m.at(i, j++) = v;
    ++i;
  }
  return m;
}

void check_snf(const IntMat& m) {
  SmithForm s = smith_normal_form(m);
  CHECK(s.u * m * s.v == s.d);
  CHECK(abs_int(determinant(s.u)) == 1);
  CHECK(abs_int(determinant(s.v)) == 1);
  for (size_t k = 0; k + 1 < s.diagonal.size(); ++k) {
    CHECK(s.diagonal[k] >= 0);
    if (s.diagonal[k] != 0) CHECK(s.diagonal[k + 1] % s.diagonal[k] == 0);
    if (s.diagonal[k] == 0) CHECK(s.diagonal[k + 1] == 0);
  }
  for (int i = 0; i < s.d.rows; ++i)
    for (int j = 0; j < s.d.cols; ++j)
      if (i != j) CHECK(s.d.at(i, j) == 0);
}

}  // namespace

TEST_CASE("smith form of a knot-style column") {
  IntMat m = from_rows({{2}, {3}});
  SmithForm s = smith_normal_form(m);
  CHECK(s.diagonal == std::vector<Integer>{1});
  check_snf(m);
}

TEST_CASE("smith form with torsion") {
  // Z^2 / <(2,0),(0,4)> = Z/2 x Z/4
  IntMat m = from_rows({{2, 0}, {0, 4}});
  SmithForm s = smith_normal_form(m);
  CHECK(s.diagonal == std::vector<Integer>{2, 4});
  check_snf(m);

  // the classic non-diagonal example: [[2,4],[-2,6]] ~ diag(2, 10)
  IntMat n = from_rows({{2, 4}, {-2, 6}});
  SmithForm sn = smith_normal_form(n);
  CHECK(sn.diagonal == std::vector<Integer>{2, 10});
  check_snf(n);
}

TEST_CASE("smith form needs the divisibility sweep") {
  // diag(2, 3) alone is NOT in normal form; the chain forces 1, 6.
  IntMat m = from_rows({{2, 0}, {0, 3}});
  SmithForm s = smith_normal_form(m);
  CHECK(s.diagonal == std::vector<Integer>{1, 6});
  check_snf(m);
}

TEST_CASE("smith form of zero and empty matrices") {
  IntMat zero(3, 2);
  SmithForm s = smith_normal_form(zero);
  CHECK(s.rank == 0);
  CHECK(s.diagonal == std::vector<Integer>{0, 0});
  check_snf(zero);

  IntMat empty(2, 0);
  SmithForm e = smith_normal_form(empty);
  CHECK(e.rank == 0);
  CHECK(e.diagonal.empty());
  CHECK(e.u == IntMat::identity(2));
}

TEST_CASE("smith form properties on random matrices") {
  std::mt19937 rng(606060);
  std::uniform_int_distribution<int> dim(1, 5), entry(-6, 6);
  for (int trial = 0; trial < 150; ++trial) {
    IntMat m(dim(rng), dim(rng));
    for (int i = 0; i < m.rows; ++i)
      for (int j = 0; j < m.cols; ++j) m.at(i, j) = entry(rng);
    check_snf(m);
  }
}

TEST_CASE("determinant agrees with cofactor expansion on small matrices") {
  CHECK(determinant(from_rows({{3}})) == 3);
  CHECK(determinant(from_rows({{1, 2}, {3, 4}})) == -2);
  CHECK(determinant(from_rows({{2, 0, 1}, {1, 1, 0}, {0, 3, 1}})) == 5);
  CHECK(determinant(from_rows({{1, 2}, {2, 4}})) == 0);
  CHECK(determinant(IntMat::identity(4)) == 1);
}

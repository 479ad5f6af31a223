#include "afnorm/polytope.hpp"

#include <algorithm>
#include <set>

#include "afnorm/simplex.hpp"

namespace afnorm {

std::vector<std::vector<Rational>> polytope_vertices(const std::vector<Monomial>& support,
                                                     int rank) {
  std::vector<Rational> origin(rank, Rational(0));
  if (support.empty()) return {origin};

  std::set<std::vector<Integer>> diff_set;
  for (const Monomial& g : support)
    for (const Monomial& h : support) {
      std::vector<Integer> d(rank);
      for (int i = 0; i < rank; ++i) d[i] = g[i] - h[i];
      diff_set.insert(std::move(d));
    }
  std::vector<std::vector<Integer>> pts(diff_set.begin(), diff_set.end());

  std::vector<std::vector<Integer>> verts;
  if (pts.size() == 1) {
    verts = pts;
  } else if (rank == 1) {
    verts.push_back(pts.front());  // set order is lexicographic: min, then max
    verts.push_back(pts.back());
  } else {
    // p is a vertex iff it is not a convex combination of the others.
    for (size_t i = 0; i < pts.size(); ++i) {
      LpProblem lp;
      lp.num_vars = static_cast<int>(pts.size()) - 1;
      std::vector<Rational> ones(lp.num_vars, Rational(1));
      lp.add_row(ones, Rational(1));
      for (int c = 0; c < rank; ++c) {
        std::vector<Rational> row;
        row.reserve(lp.num_vars);
        for (size_t j = 0; j < pts.size(); ++j)
          if (j != i) row.push_back(Rational(pts[j][c]));
        lp.add_row(std::move(row), Rational(pts[i][c]));
      }
      if (!lp_feasible(lp)) verts.push_back(pts[i]);
    }
  }

  std::vector<std::vector<Rational>> out;
  out.reserve(verts.size());
  for (const auto& v : verts) {
    std::vector<Rational> half(rank);
    for (int i = 0; i < rank; ++i) half[i] = Rational(v[i]) / 2;
    out.push_back(std::move(half));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace afnorm

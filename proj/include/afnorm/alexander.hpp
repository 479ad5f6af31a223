#pragma once

#include <map>
#include <vector>

#include "afnorm/abelian.hpp"
#include "afnorm/fox.hpp"
#include "afnorm/laurent.hpp"

namespace afnorm {

// Monomial of the group ring Z[H]: a torsion coordinate tuple (entries
// reduced mod the invariant factors) and a free Laurent monomial.
struct HMonomial {
  std::vector<Integer> torsion;
  Monomial free_part;

  bool operator==(const HMonomial&) const = default;
  bool operator<(const HMonomial& rhs) const {
    if (torsion != rhs.torsion) return torsion < rhs.torsion;
    return free_part < rhs.free_part;
  }
};

// Element of Z[H]; zero coefficients are never stored.
class HRingElem {
 public:
  bool is_zero() const { return terms_.empty(); }
  const std::map<HMonomial, Integer>& terms() const { return terms_; }

  void add_term(const HMonomial& m, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  HRingElem& operator+=(const HRingElem& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
  }
  bool operator==(const HRingElem&) const = default;

 private:
  std::map<HMonomial, Integer> terms_;
};

// Push a free-group ring element through Z[F] -> Z[H].
HRingElem image_in_h(const FreeRingElem& e, const AbelianStructure& h);

// The Fox derivative matrix of the presentation over Z[H]: entry (j, i) is
// the image of d(r_j)/d(x_i). Padded with zero rows up to the generator
// count, so minors of every order up to m exist.
struct AlexanderMatrix {
  int rows = 0, cols = 0;
  std::vector<std::vector<HRingElem>> entries;
};

AlexanderMatrix alexander_matrix(const Presentation& p, const AbelianStructure& h);

// Coefficient specializations of Z[H]. project_free kills the torsion
// splitting (trivial character); apply_character twists it into Q(zeta_N);
// specialize_elem additionally collapses the free part along a cohomology
// class, g -> t^<cls, g>, landing in univariate Laurent polynomials.
IntLaurent project_free(const HRingElem& e, const AbelianStructure& h);
CycLaurent apply_character(const HRingElem& e, const AbelianStructure& h, const Character& chi);
CycLaurent specialize_elem(const HRingElem& e, const AbelianStructure& h, const Character& chi,
                           const std::vector<Integer>& cls);

// Generators (all minors of the stated order, zeros dropped) of the ideal
// of k x k minors of a mapped matrix. Order 0 gives {1}; an order
// exceeding the matrix dimensions gives {}.
template <class C>
std::vector<LaurentPoly<C>> minor_ideal(const std::vector<std::vector<LaurentPoly<C>>>& mat,
                                        int order, int rank);

// Elementary ideal E_d: minors of order (m - d) of the Alexander matrix
// under the chosen coefficient map.
std::vector<IntLaurent> elementary_ideal(const AlexanderMatrix& a, const AbelianStructure& h,
                                         int d);
std::vector<CycLaurent> elementary_ideal(const AlexanderMatrix& a, const AbelianStructure& h,
                                         const Character& chi, int d);

// Alexander polynomial: gcd of E_1, in canonical form. Zero when E_1 is
// empty or all-zero. The untwisted version keeps integer content (so it
// can be a nontrivial constant); the twisted version lives over Q(zeta_N).
IntLaurent alexander_poly(const AlexanderMatrix& a, const AbelianStructure& h);
CycLaurent alexander_poly(const AlexanderMatrix& a, const AbelianStructure& h,
                          const Character& chi);

// gcd of the order-(m-1) minors after specializing along cls (univariate).
CycLaurent specialized_gcd(const AlexanderMatrix& a, const AbelianStructure& h,
                           const Character& chi, const std::vector<Integer>& cls);

// Relation between the specialized matrix and the twisted polynomial: for
// a primitive class that is injective on the relevant supports, the
// specialized gcd must be divisible by (t-1)^e * (image of the twisted
// polynomial), where e = 1 exactly when the character is trivial and the
// free rank is at least 2; in particular its span exceeds the polynomial
// norm by at least e.
struct SpecializationCheck {
  bool delta_zero = false;
  bool primitive = false;
  bool regular = false;   // class injective on the supports involved
  bool applicable = false;  // !delta_zero && primitive && regular
  int delta_exponent = 0;
  CycLaurent delta{0};
  CycLaurent specialized{1};
  CycLaurent expected_divisor{1};
  Integer span_delta;
  Integer span_specialized;
  bool span_ok = false;
  bool divisible = false;
};

SpecializationCheck check_specialization(const AlexanderMatrix& a, const AbelianStructure& h,
                                         const Character& chi, const std::vector<Integer>& cls);

// --- template implementation ---

template <class C>
std::vector<LaurentPoly<C>> minor_ideal(const std::vector<std::vector<LaurentPoly<C>>>& mat,
                                        int order, int rank) {
  std::vector<LaurentPoly<C>> gens;
  if (order <= 0) {
    gens.push_back(LaurentPoly<C>::one(rank));
    return gens;
  }
  const int rows = static_cast<int>(mat.size());
  const int cols = rows ? static_cast<int>(mat[0].size()) : 0;
  if (order > rows || order > cols) return gens;

  // Enumerate row and column subsets of the given size.
  auto subsets = [](int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    for (;;) {
      out.push_back(pick);
      int i = k - 1;
      while (i >= 0 && pick[i] == n - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
  };

  for (const auto& rsel : subsets(rows, order))
    for (const auto& csel : subsets(cols, order)) {
      std::vector<std::vector<LaurentPoly<C>>> sub(order);
      for (int i = 0; i < order; ++i) {
        sub[i].reserve(order);
        for (int j = 0; j < order; ++j) sub[i].push_back(mat[rsel[i]][csel[j]]);
      }
      LaurentPoly<C> det = determinant(sub, rank);
      if (!det.is_zero()) gens.push_back(std::move(det));
    }
  return gens;
}

}  // namespace afnorm

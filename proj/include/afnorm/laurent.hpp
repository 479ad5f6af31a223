#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "afnorm/cyclotomic.hpp"
#include "afnorm/numeric.hpp"

namespace afnorm {

// Exponent vector of a Laurent monomial (entries may be negative).
// Compared lexicographically, which is a multiplicative total order.
using Monomial = std::vector<Integer>;

// What LaurentPoly needs from its coefficient ring. Integer coefficients
// model Z (a UFD with units +-1); Cyclotomic coefficients model the field
// Q(zeta_n).
template <class C>
struct CoeffTraits;

template <>
struct CoeffTraits<Integer> {
  static constexpr bool is_field = false;
  static Integer one() { return Integer(1); }
  static bool is_zero(const Integer& c) { return c == 0; }
  static std::optional<Integer> exact_div(const Integer& a, const Integer& b) {
    if (b == 0) return std::nullopt;
    if (a % b != 0) return std::nullopt;
    return Integer(a / b);
  }
  // Multiplier turning `lead` into its canonical unit representative (+|lead|).
  static Integer normalizer(const Integer& lead) { return lead < 0 ? Integer(-1) : Integer(1); }
};

template <>
struct CoeffTraits<Cyclotomic> {
  static constexpr bool is_field = true;
  static Cyclotomic one() { return Cyclotomic(Integer(1)); }
  static bool is_zero(const Cyclotomic& c) { return c.is_zero(); }
  static std::optional<Cyclotomic> exact_div(const Cyclotomic& a, const Cyclotomic& b) {
    if (b.is_zero()) return std::nullopt;
    return a * b.inverse();
  }
  static Cyclotomic normalizer(const Cyclotomic& lead) { return lead.inverse(); }
};

// A Laurent polynomial in `rank` commuting variables. Terms are kept in a
// map ordered lexicographically on exponent vectors; zero coefficients are
// never stored, so the zero polynomial has an empty term map.
template <class C>
class LaurentPoly {
 public:
  explicit LaurentPoly(int rank = 0) : rank_(rank) {}

  static LaurentPoly constant(int rank, const C& c) {
    LaurentPoly p(rank);
    p.add_term(Monomial(rank), c);
    return p;
  }
  static LaurentPoly one(int rank) { return constant(rank, CoeffTraits<C>::one()); }
  static LaurentPoly term(int rank, const Monomial& m, const C& c) {
    LaurentPoly p(rank);
    p.add_term(m, c);
    return p;
  }

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, C>& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }

  void add_term(const Monomial& m, const C& c) {
    if (static_cast<int>(m.size()) != rank_)
      throw std::invalid_argument("monomial rank mismatch");
    if (CoeffTraits<C>::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (CoeffTraits<C>::is_zero(it->second)) terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& rhs) {
    check_rank(rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& rhs) {
    check_rank(rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m, negate(c));
    return *this;
  }
  LaurentPoly operator+(const LaurentPoly& rhs) const {
    LaurentPoly p = *this;
    return p += rhs;
  }
  LaurentPoly operator-(const LaurentPoly& rhs) const {
    LaurentPoly p = *this;
    return p -= rhs;
  }
  LaurentPoly operator-() const {
    LaurentPoly p(rank_);
    for (const auto& [m, c] : terms_) p.terms_.emplace(m, negate(c));
    return p;
  }
  LaurentPoly operator*(const LaurentPoly& rhs) const {
    check_rank(rhs);
    LaurentPoly p(rank_);
    for (const auto& [ma, ca] : terms_)
      for (const auto& [mb, cb] : rhs.terms_) {
        Monomial m(rank_);
        for (int i = 0; i < rank_; ++i) m[i] = ma[i] + mb[i];
        p.add_term(m, ca * cb);
      }
    return p;
  }

  // Multiply by the unit t^delta.
  LaurentPoly shifted(const Monomial& delta) const {
    LaurentPoly p(rank_);
    for (const auto& [m, c] : terms_) {
      Monomial s(rank_);
      for (int i = 0; i < rank_; ++i) s[i] = m[i] + delta[i];
      p.terms_.emplace(std::move(s), c);
    }
    return p;
  }

  LaurentPoly scaled(const C& c) const {
    LaurentPoly p(rank_);
    if (CoeffTraits<C>::is_zero(c)) return p;
    for (const auto& [m, k] : terms_) {
      C prod = k * c;
      if (!CoeffTraits<C>::is_zero(prod)) p.terms_.emplace(m, std::move(prod));
    }
    return p;
  }

  // Componentwise minimum of the support exponents. Requires a nonzero poly.
  Monomial support_min() const {
    if (is_zero()) throw std::logic_error("support_min of zero polynomial");
    Monomial lo = terms_.begin()->first;
    for (const auto& [m, c] : terms_)
      for (int i = 0; i < rank_; ++i)
        if (m[i] < lo[i]) lo[i] = m[i];
    return lo;
  }

  // Lexicographically extreme terms of a nonzero polynomial.
  const std::pair<const Monomial, C>& lex_min_term() const { return *terms_.begin(); }
  const std::pair<const Monomial, C>& lex_max_term() const { return *terms_.rbegin(); }

  bool operator==(const LaurentPoly& rhs) const {
    return rank_ == rhs.rank_ && terms_ == rhs.terms_;
  }
  bool operator!=(const LaurentPoly& rhs) const { return !(*this == rhs); }

 private:
  static C negate(const C& c) { return -c; }
  void check_rank(const LaurentPoly& rhs) const {
    if (rank_ != rhs.rank_) throw std::invalid_argument("laurent rank mismatch");
  }

  int rank_;
  std::map<Monomial, C> terms_;
};

using IntLaurent = LaurentPoly<Integer>;
using CycLaurent = LaurentPoly<Cyclotomic>;

// Canonical form: translate the support so its lexicographically smallest
// exponent vector becomes the origin, then scale so the lex-leading
// coefficient is positive (over Z) or 1 (over a field). Two polynomials
// agree up to a unit (+-
// monomial over Z, nonzero scalar times monomial over a field) iff their
// canonical forms are equal. canonical_form(0) = 0.
template <class C>
LaurentPoly<C> canonical_form(const LaurentPoly<C>& p) {
  if (p.is_zero()) return p;
  Monomial shift = p.lex_min_term().first;
  for (Integer& e : shift) e = -e;
  LaurentPoly<C> q = p.shifted(shift);
  return q.scaled(CoeffTraits<C>::normalizer(q.lex_max_term().second));
}

// Exact division in the Laurent ring: returns q with f = q * d, or nullopt
// if d does not divide f. Division of zero by zero yields zero.
template <class C>
std::optional<LaurentPoly<C>> try_divide_exact(const LaurentPoly<C>& f, const LaurentPoly<C>& d) {
  const int r = f.rank();
  if (d.rank() != r) throw std::invalid_argument("laurent rank mismatch");
  if (d.is_zero()) {
    if (f.is_zero()) return f;
    return std::nullopt;
  }
  if (f.is_zero()) return f;

  // Shift both operands to honest polynomials (exponents >= 0, each
  // coordinate attaining 0). The quotient of honest polynomials is honest,
  // and lex-leading terms are multiplicative, so cancelling leading terms
  // terminates: the dividend's leading monomial strictly decreases in a
  // well-ordered set.
  Monomial fmin = f.support_min(), dmin = d.support_min();
  Monomial neg_f = fmin, neg_d = dmin;
  for (Integer& e : neg_f) e = -e;
  for (Integer& e : neg_d) e = -e;
  LaurentPoly<C> rem = f.shifted(neg_f);
  LaurentPoly<C> den = d.shifted(neg_d);

  LaurentPoly<C> quot(r);
  while (!rem.is_zero()) {
    const auto& [fm, fc] = rem.lex_max_term();
    const auto& [dm, dc] = den.lex_max_term();
    Monomial m(r);
    for (int i = 0; i < r; ++i) {
      m[i] = fm[i] - dm[i];
      if (m[i] < 0) return std::nullopt;
    }
    std::optional<C> c = CoeffTraits<C>::exact_div(fc, dc);
    if (!c) return std::nullopt;
    LaurentPoly<C> t = LaurentPoly<C>::term(r, m, *c);
    quot += t;
    rem -= t * den;
  }
  // Undo the shifts: f = t^fmin * F, d = t^dmin * D, so q = t^(fmin-dmin) * Q.
  Monomial unshift(r);
  for (int i = 0; i < r; ++i) unshift[i] = fmin[i] - dmin[i];
  return quot.shifted(unshift);
}

namespace laurent_detail {

// A polynomial viewed univariately in variable 0, with coefficients of one
// rank lower. Used only by the gcd.
template <class C>
using UniPoly = std::map<Integer, LaurentPoly<C>>;

template <class C>
UniPoly<C> split_main(const LaurentPoly<C>& p) {
  UniPoly<C> u;
  const int r = p.rank();
  for (const auto& [m, c] : p.terms()) {
    Monomial rest(m.begin() + 1, m.end());
    auto [it, inserted] = u.emplace(m[0], LaurentPoly<C>(r - 1));
    it->second.add_term(rest, c);
  }
  return u;
}

template <class C>
LaurentPoly<C> join_main(const UniPoly<C>& u, int rank) {
  LaurentPoly<C> p(rank);
  for (const auto& [deg, coef] : u)
    for (const auto& [m, c] : coef.terms()) {
      Monomial full(rank);
      full[0] = deg;
      for (size_t i = 0; i < m.size(); ++i) full[i + 1] = m[i];
      p.add_term(full, c);
    }
  return p;
}

template <class C>
void drop_zeros(UniPoly<C>& u) {
  for (auto it = u.begin(); it != u.end();)
    it = it->second.is_zero() ? u.erase(it) : std::next(it);
}

// u -= factor * t0^shift * v, where factor has the coefficient rank.
template <class C>
void sub_scaled(UniPoly<C>& u, const UniPoly<C>& v, const LaurentPoly<C>& factor,
                const Integer& shift) {
  for (const auto& [deg, coef] : v) {
    Integer d = deg + shift;
    auto [it, inserted] = u.emplace(d, LaurentPoly<C>(factor.rank()));
    it->second -= factor * coef;
    if (it->second.is_zero()) u.erase(it);
  }
}

}  // namespace laurent_detail

template <class C>
LaurentPoly<C> gcd(const LaurentPoly<C>& a, const LaurentPoly<C>& b);

template <class C>
LaurentPoly<C> gcd_list(const std::vector<LaurentPoly<C>>& v, int rank) {
  LaurentPoly<C> g(rank);
  for (const LaurentPoly<C>& p : v) g = gcd(g, p);
  return g;
}

// Greatest common divisor in the Laurent polynomial ring, returned in
// canonical form. gcd(0, 0) = 0. Recursive primitive pseudo-remainder
// sequence: split off variable 0, pull out the content (gcd of the
// coefficients, one rank down), run a PRS on the primitive parts, and
// multiply back the gcd of the contents. At rank 0 the coefficients
// themselves are the gcd data: integer gcd over Z, normalization over a
// field. Gauss's lemma makes the content/primitive-part split sound.
template <class C>
LaurentPoly<C> gcd(const LaurentPoly<C>& a, const LaurentPoly<C>& b) {
  using laurent_detail::UniPoly;
  const int r = a.rank();
  if (b.rank() != r) throw std::invalid_argument("laurent rank mismatch");
  if (a.is_zero()) return canonical_form(b);
  if (b.is_zero()) return canonical_form(a);

  if (r == 0) {
    if constexpr (CoeffTraits<C>::is_field) {
      return LaurentPoly<C>::one(0);
    } else {
      const Integer& ca = a.terms().begin()->second;
      const Integer& cb = b.terms().begin()->second;
      return LaurentPoly<C>::constant(0, gcd_int(ca, cb));
    }
  }

  auto content_and_primitive =
      [&](const LaurentPoly<C>& p) -> std::pair<LaurentPoly<C>, UniPoly<C>> {
    UniPoly<C> u = laurent_detail::split_main(p);
    std::vector<LaurentPoly<C>> coeffs;
    for (const auto& [deg, coef] : u) coeffs.push_back(coef);
    LaurentPoly<C> content = gcd_list(coeffs, r - 1);
    for (auto& [deg, coef] : u) {
      std::optional<LaurentPoly<C>> q = try_divide_exact(coef, content);
      if (!q) throw std::logic_error("content failed to divide a coefficient");
      coef = std::move(*q);
    }
    return {std::move(content), std::move(u)};
  };

  auto primitive_part = [&](UniPoly<C>& u) {
    laurent_detail::drop_zeros(u);
    if (u.empty()) return;
    std::vector<LaurentPoly<C>> coeffs;
    for (const auto& [deg, coef] : u) coeffs.push_back(coef);
    LaurentPoly<C> content = gcd_list(coeffs, r - 1);
    for (auto& [deg, coef] : u) {
      std::optional<LaurentPoly<C>> q = try_divide_exact(coef, content);
      if (!q) throw std::logic_error("content failed to divide a coefficient");
      coef = std::move(*q);
    }
    if constexpr (CoeffTraits<C>::is_field) {
      // Over a field the rank-0 content is trivial; normalize the leading
      // coefficient instead to keep PRS growth in check.
      if (r == 1) {
        const C lead = u.rbegin()->second.terms().begin()->second;
        C inv = *CoeffTraits<C>::exact_div(CoeffTraits<C>::one(), lead);
        for (auto& [deg, coef] : u) coef = coef.scaled(inv);
      }
    }
  };

  auto [content_a, ua] = content_and_primitive(a);
  auto [content_b, ub] = content_and_primitive(b);
  LaurentPoly<C> content_gcd = gcd(content_a, content_b);

  // Primitive PRS in variable 0: A <- B, B <- primitive(prem(A, B)).
  UniPoly<C>* A = &ua;
  UniPoly<C>* B = &ub;
  if (A->rbegin()->first < B->rbegin()->first) std::swap(A, B);
  while (!B->empty()) {
    // prem: repeatedly cancel the leading term of A against B.
    while (!A->empty() && A->rbegin()->first >= B->rbegin()->first) {
      LaurentPoly<C> lcA = A->rbegin()->second;
      LaurentPoly<C> lcB = B->rbegin()->second;
      Integer shift = A->rbegin()->first - B->rbegin()->first;
      // A <- lcB * A - lcA * t0^shift * B  (leading terms cancel)
      for (auto& [deg, coef] : *A) coef = coef * lcB;
      laurent_detail::drop_zeros(*A);
      laurent_detail::sub_scaled(*A, *B, lcA, shift);
    }
    primitive_part(*A);
    std::swap(A, B);
  }
  LaurentPoly<C> result = laurent_detail::join_main(*A, r) *
                          [&] {
                            // Embed the content gcd back at full rank.
                            LaurentPoly<C> e(r);
                            for (const auto& [m, c] : content_gcd.terms()) {
                              Monomial full(r);
                              for (size_t i = 0; i < m.size(); ++i) full[i + 1] = m[i];
                              e.add_term(full, c);
                            }
                            return e;
                          }();
  return canonical_form(result);
}

// Width of the support of p in the direction s: max <s, g> - min <s, g>
// over monomials g in the support. span(0, s) = 0.
template <class C>
Integer span(const LaurentPoly<C>& p, const std::vector<Integer>& direction) {
  if (static_cast<int>(direction.size()) != p.rank())
    throw std::invalid_argument("direction length must equal rank");
  if (p.is_zero()) return 0;
  bool first = true;
  Integer lo = 0, hi = 0;
  for (const auto& [m, c] : p.terms()) {
    Integer dot = 0;
    for (size_t i = 0; i < direction.size(); ++i) dot += direction[i] * m[i];
    if (first) {
      lo = hi = dot;
      first = false;
    } else {
      if (dot < lo) lo = dot;
      if (dot > hi) hi = dot;
    }
  }
  return hi - lo;
}

// Determinant of a square matrix of Laurent polynomials, by dynamic
// programming over column subsets (O(2^k k) ring operations instead of k!).
// The determinant of the empty matrix is 1.
template <class C>
LaurentPoly<C> determinant(const std::vector<std::vector<LaurentPoly<C>>>& mat, int rank) {
  const size_t k = mat.size();
  for (const auto& row : mat)
    if (row.size() != k) throw std::invalid_argument("determinant needs a square matrix");
  std::vector<LaurentPoly<C>> dp(size_t(1) << k, LaurentPoly<C>(rank));
  dp[0] = LaurentPoly<C>::one(rank);
  for (size_t mask = 1; mask < dp.size(); ++mask) {
    int row = __builtin_popcountll(mask) - 1;
    int pos = 0;
    for (size_t j = 0; j < k; ++j) {
      if (!(mask & (size_t(1) << j))) continue;
      const LaurentPoly<C>& entry = mat[row][j];
      if (!entry.is_zero()) {
        LaurentPoly<C> contrib = entry * dp[mask ^ (size_t(1) << j)];
        if ((row + pos) % 2 == 0)
          dp[mask] += contrib;
        else
          dp[mask] -= contrib;
      }
      ++pos;
    }
  }
  return dp.back();
}

std::vector<std::string> default_var_names(int rank);
std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names);
std::string laurent_to_string(const IntLaurent& p, const std::vector<std::string>& names);
std::string laurent_to_string(const CycLaurent& p, const std::vector<std::string>& names);
inline std::string laurent_to_string(const IntLaurent& p) {
  return laurent_to_string(p, default_var_names(p.rank()));
}
inline std::string laurent_to_string(const CycLaurent& p) {
  return laurent_to_string(p, default_var_names(p.rank()));
}

}  // namespace afnorm

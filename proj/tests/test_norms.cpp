#include <doctest.h>

#include <random>

#include "afnorm/norms.hpp"
#include "afnorm/parse.hpp"

using namespace afnorm;

namespace {

std::vector<Integer> ints(std::initializer_list<long long> v) {
  return std::vector<Integer>(v.begin(), v.end());
}

NormContext context_of(const std::string& text) {
  return make_norm_context(parse_presentation(text));
}

}  // namespace

TEST_CASE("weighted complex norm: golden values") {
  NormContext c = context_of("< x, y | x^2 y^3 >");
  // x appears twice (weight 0), y three times (weight 1/2), class(y) = +-2
  CHECK(presentation_complex_norm(c.p, c.h, ints({1})) == 1);
  CHECK(presentation_complex_norm(c.p, c.h, ints({-4})) == 4);
  CHECK(presentation_complex_norm(c.p, c.h, ints({0})) == 0);

  NormContext f = context_of("< x, y, T | T x T^-1 y^-1, T y T^-1 y^-1 x^-1 >");
  // only T carries the class; it appears four times -> weight 1
  CHECK(presentation_complex_norm(f.p, f.h, ints({1})) == 1);
  CHECK(presentation_complex_norm(f.p, f.h, ints({5})) == 5);
}

TEST_CASE("weighted complex norm: error conditions") {
  NormContext c = context_of("< x, y | x^2 y^3 >");
  CHECK_THROWS_AS(presentation_complex_norm(c.p, c.h, ints({1, 2})), DomainError);
  // a generator appearing fewer than twice is rejected
  Presentation free2 = parse_presentation("< x, y | >");
  AbelianStructure h2 = abelianize(free2);
  CHECK_THROWS_AS(presentation_complex_norm(free2, h2, ints({1, 0})), DomainError);
  Presentation once = parse_presentation("< x, y | x y^2 >");
  AbelianStructure h1 = abelianize(once);
  CHECK_THROWS_AS(presentation_complex_norm(once, h1, ints({1})), DomainError);
}

TEST_CASE("rank-one correction") {
  CHECK(rank_one_norm(1, ints({-7})) == 7);
  CHECK(rank_one_norm(2, ints({3, 4})) == 0);
  CHECK(rank_one_norm(0, {}) == 0);
}

TEST_CASE("polynomial seminorm satisfies the norm axioms along classes") {
  std::mt19937 rng(616);
  std::uniform_int_distribution<long long> expo(-4, 4);
  std::uniform_int_distribution<long long> sval(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    int rank = 1 + trial % 3;
    IntLaurent p(rank);
    std::uniform_int_distribution<int> nterms(1, 5);
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
      Monomial m(rank);
      for (int j = 0; j < rank; ++j) m[j] = expo(rng);
      p.add_term(m, Integer(1 + (i % 3)));
    }
    std::vector<Integer> a(rank), b(rank), sum(rank);
    for (int j = 0; j < rank; ++j) {
      a[j] = sval(rng);
      b[j] = sval(rng);
      sum[j] = a[j] + b[j];
    }
    // homogeneity
    std::vector<Integer> ka(rank);
    for (int j = 0; j < rank; ++j) ka[j] = -3 * a[j];
    CHECK(alexander_norm(p, ka) == 3 * alexander_norm(p, a));
    // triangle inequality
    CHECK(alexander_norm(p, sum) <= alexander_norm(p, a) + alexander_norm(p, b));
    // zero class
    CHECK(alexander_norm(p, std::vector<Integer>(rank, Integer(0))) == 0);
  }
}

TEST_CASE("comparison on the (2,3) one-relator group: equality") {
  NormContext c = context_of("< x, y | x^2 y^3 >");
  for (long long s : {1LL, -1LL, 2LL, 5LL}) {
    InequalityReport rep = verify_inequality(c, ints({s}));
    CHECK(rep.holds);
    CHECK(rep.equality);
    CHECK(rep.lhs == Rational(abs_int(Integer(s))));
    REQUIRE(rep.terms.size() == 1);
    CHECK(rep.terms[0].chi.is_trivial());
    CHECK(rep.terms[0].norm == 2 * abs_int(Integer(s)));
    CHECK(rep.terms[0].penalty == abs_int(Integer(s)));
  }
}

TEST_CASE("comparison on (p,q) one-relator groups stays an equality") {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 5}, {3, 4}, {3, 5}}) {
    NormContext c =
        context_of("< x, y | x^" + std::to_string(p) + " y^" + std::to_string(q) + " >");
    InequalityReport rep = verify_inequality(c, ints({1}));
    CHECK(rep.holds);
    CHECK(rep.equality);
    CHECK(rep.lhs == Rational(p * q - p - q));
  }
}

TEST_CASE("torsion family: equality exactly when the twist survives") {
  // < x, y | x^k y^l x^-k y^-l, y^m >: complex norm k-1; the twisted bound
  // reaches k-1 iff some character is nontrivial on y^l, i.e. iff m does not
  // divide l.
  for (int k : {1, 2, 3})
    for (int l : {1, 2, 4})
      for (int m : {2, 3}) {
        std::string text = "< x, y | x^" + std::to_string(k) + " y^" + std::to_string(l) +
                           " x^-" + std::to_string(k) + " y^-" + std::to_string(l) + ", y^" +
                           std::to_string(m) + " >";
        NormContext c = context_of(text);
        InequalityReport rep = verify_inequality(c, ints({1}));
        CHECK(rep.holds);
        CHECK(rep.lhs == Rational(k - 1));
        bool twist_survives = l % m != 0;
        if (twist_survives)
          CHECK(rep.rhs == Rational(k - 1));
        else
          CHECK(rep.rhs == 0);  // all twisted terms die; trivial term is negative
        CHECK(rep.equality == (twist_survives || k == 1));
      }
}

TEST_CASE("free-by-cyclic example: equality via the untwisted polynomial") {
  NormContext c = context_of("< x, y, T | T x T^-1 y^-1, T y T^-1 y^-1 x^-1 >");
  InequalityReport rep = verify_inequality(c, ints({1}));
  CHECK(rep.holds);
  CHECK(rep.equality);
  CHECK(rep.lhs == 1);
  CHECK(rep.terms[0].norm == 2);
  CHECK(rep.terms[0].penalty == 1);
}

TEST_CASE("the bound can be negative while the norm stays nonnegative") {
  NormContext c = context_of("< x, y | x y x^-1 y^-1, y >");
  InequalityReport rep = verify_inequality(c, ints({1}));
  CHECK(rep.holds);
  CHECK_FALSE(rep.equality);
  CHECK(rep.lhs == 0);
  CHECK(rep.rhs == Rational(-1));
}

TEST_CASE("zero class always gives equality 0 = 0 when weights exist") {
  NormContext c = context_of("< x, y | x^3 y^4 >");
  InequalityReport rep = verify_inequality(c, ints({0}));
  CHECK(rep.holds);
  CHECK(rep.lhs == 0);
  CHECK(rep.rhs == 0);
  CHECK(rep.equality);
}

TEST_CASE("character blowup guard") {
  Presentation p = parse_presentation("< x, y | x^2, y^4 >");
  CHECK_THROWS_AS(make_norm_context(p, Integer(4)), ResourceError);
  CHECK_NOTHROW(make_norm_context(p, Integer(8)));
}

TEST_CASE("context caches align characters with their polynomials") {
  NormContext c = context_of("< x, y | x^2 y x^-2 y^-1, y^2 >");
  REQUIRE(c.characters.size() == 2);
  CHECK(c.characters[0].is_trivial());
  REQUIRE(c.deltas.size() == 2);
  // trivial delta has the same span as the integer polynomial
  CHECK(span(c.deltas[0], ints({1})) == span(c.delta_integer, ints({1})));
}

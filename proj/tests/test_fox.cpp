#include <doctest.h>

#include <random>

#include "afnorm/fox.hpp"
#include "test_support.hpp"

using namespace afnorm;

namespace {

FreeRingElem word(std::initializer_list<FreeWord::Syllable> syl, long long c = 1) {
  return FreeRingElem::from_word(FreeWord::from_syllables(syl), Integer(c));
}

}  // namespace

TEST_CASE("derivative of a positive power expands as a geometric sum") {
  // d(x^3)/dx = 1 + x + x^2
  FreeRingElem d = fox_derivative(FreeWord::generator_power(0, 3), 0);
  FreeRingElem expected = word({}) + word({{0, 1}}) + word({{0, 2}});
  CHECK(d == expected);
}

TEST_CASE("derivative of a negative power") {
  // d(x^-2)/dx = -(x^-1 + x^-2)
  FreeRingElem d = fox_derivative(FreeWord::generator_power(0, -2), 0);
  FreeRingElem expected = word({{0, -1}}, -1) + word({{0, -2}}, -1);
  CHECK(d == expected);
}

TEST_CASE("derivatives of x^2 y^3") {
  FreeWord r = FreeWord::from_syllables({{0, 2}, {1, 3}});
  CHECK(fox_derivative(r, 0) == word({}) + word({{0, 1}}));
  CHECK(fox_derivative(r, 1) == word({{0, 2}}) + word({{0, 2}, {1, 1}}) + word({{0, 2}, {1, 2}}));
}

TEST_CASE("derivative of a commutator") {
  // r = x y x^-1 y^-1: dr/dx = 1 - x y x^-1, dr/dy = x - x y x^-1 y^-1
  FreeWord r = FreeWord::from_syllables({{0, 1}, {1, 1}, {0, -1}, {1, -1}});
  CHECK(fox_derivative(r, 0) == word({}) + word({{0, 1}, {1, 1}, {0, -1}}, -1));
  CHECK(fox_derivative(r, 1) == word({{0, 1}}) + word({{0, 1}, {1, 1}, {0, -1}, {1, -1}}, -1));
}

TEST_CASE("derivative of the identity and of foreign generators") {
  CHECK(fox_derivative(FreeWord{}, 0).is_zero());
  CHECK(fox_derivative(FreeWord::generator_power(1, 5), 0).is_zero());
}

TEST_CASE("product rule on random pairs") {
  std::mt19937 rng(4242);
  for (int i = 0; i < 250; ++i) {
    FreeWord u = testing::random_word(rng, 3, 5);
    FreeWord v = testing::random_word(rng, 3, 5);
    for (int g = 0; g < 3; ++g) {
      FreeRingElem lhs = fox_derivative(u * v, g);
      FreeRingElem rhs = fox_derivative(u, g) +
                         FreeRingElem::from_word(u) * fox_derivative(v, g);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("inverse rule on random words") {
  // d(u^-1) = -u^-1 d(u)
  std::mt19937 rng(515151);
  for (int i = 0; i < 200; ++i) {
    FreeWord u = testing::random_word(rng, 3, 5);
    for (int g = 0; g < 3; ++g) {
      FreeRingElem lhs = fox_derivative(u.inverse(), g);
      FreeRingElem rhs = -(FreeRingElem::from_word(u.inverse()) * fox_derivative(u, g));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("expansion identity on random words") {
  std::mt19937 rng(31337);
  for (int i = 0; i < 300; ++i) {
    FreeWord u = testing::random_word(rng, 4, 6);
    CHECK(fox_identity_holds(u, 4));
  }
}

TEST_CASE("free ring arithmetic is associative and distributive") {
  std::mt19937 rng(2024);
  auto random_elem = [&rng]() {
    FreeRingElem e;
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int i = 0; i < 3; ++i)
      e += FreeRingElem::from_word(testing::random_word(rng, 2, 3), Integer(coeff(rng)));
    return e;
  };
  for (int i = 0; i < 60; ++i) {
    FreeRingElem a = random_elem(), b = random_elem(), c = random_elem();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK((a - a).is_zero());
  }
}

#include <doctest.h>

#include "bider/bilinear.hpp"
#include "bider/random.hpp"
#include "bider/suites.hpp"

using namespace bider;

namespace {
Vector e(std::size_t i) { return unit_vector(3, i - 1); }
}  // namespace

TEST_CASE("evaluate on the Heisenberg example maps") {
  const BilinearTensor b1 = heisenberg_b1(), b2 = heisenberg_b2();
  CHECK(evaluate(b1, e(1), e(2)) == e(1));
  CHECK(evaluate(b1, e(2), e(1)) == e(1));
  CHECK(evaluate(b1, e(1), e(1)) == e(3));
  CHECK(evaluate(b1, e(2), e(2)) == Rational(-1) * e(3));
  CHECK(evaluate(b2, e(1) + e(2), e(3)) == Rational(2) * e(3));
  CHECK(is_zero(evaluate(BilinearTensor(3), e(1), e(2))));
  CHECK_THROWS_AS(evaluate(b1, unit_vector(2, 0), e(1)), std::invalid_argument);
}

TEST_CASE("evaluate is bilinear") {
  Sampler s(21);
  for (int k = 0; k < 20; ++k) {
    const BilinearTensor b = s.tensor(3);
    const Vector x = s.vector(3), x2 = s.vector(3), y = s.vector(3);
    const Rational c = s.rational();
    CHECK(evaluate(b, x + c * x2, y) == evaluate(b, x, y) + c * evaluate(b, x2, y));
    CHECK(evaluate(b, y, x + c * x2) == evaluate(b, y, x) + c * evaluate(b, y, x2));
  }
}

TEST_CASE("transpose") {
  const BilinearTensor b1 = heisenberg_b1();
  CHECK(transpose(b1) == b1);
  CHECK(b1.is_symmetric());
  CHECK(heisenberg_b2().is_symmetric());

  BilinearTensor b(3);
  b.set_value(1, 0, Rational(-1) * e(1));
  CHECK(evaluate(transpose(b), e(1), e(2)) == Rational(-1) * e(1));
  CHECK(is_zero(evaluate(transpose(b), e(2), e(1))));

  Sampler s(22);
  for (int k = 0; k < 10; ++k) {
    const BilinearTensor t = s.tensor(3);
    CHECK(transpose(transpose(t)) == t);
    const Vector x = s.vector(3), y = s.vector(3);
    CHECK(evaluate(transpose(t), x, y) == evaluate(t, y, x));
  }
}

TEST_CASE("sigma and alpha") {
  const BilinearTensor b1 = heisenberg_b1();
  CHECK(sigma(b1) == scale(2, b1));
  CHECK(alpha(b1).is_zero());

  Sampler s(23);
  for (int k = 0; k < 100; ++k) {
    const BilinearTensor b = s.tensor(3), c = s.tensor(3);
    const Rational p = s.rational(), q = s.rational();
    CHECK(sigma(b).is_symmetric());
    CHECK(alpha(b).is_skew_symmetric());
    CHECK(sigma(b) - alpha(b) == scale(2, transpose(b)));
    CHECK(scale(Rational(1, 2), sigma(b) + alpha(b)) == b);
    CHECK(sigma(p * b + q * c) == p * sigma(b) + q * sigma(c));
    CHECK(alpha(p * b + q * c) == p * alpha(b) + q * alpha(c));
  }
}

TEST_CASE("add and scale") {
  const BilinearTensor b1 = heisenberg_b1(), b2 = heisenberg_b2();
  CHECK(add(b1, scale(-1, b1)).is_zero());
  CHECK(evaluate(scale(2, b1), e(1), e(2)) == Rational(2) * e(1));
  CHECK(evaluate(add(b1, b2), e(2), e(2)) == e(2) - e(3));
  CHECK_THROWS_AS(add(b1, BilinearTensor(2)), std::invalid_argument);
}

TEST_CASE("coordinate layout") {
  BilinearTensor b(2);
  b.at(1, 0, 1) = 5;
  CHECK(b.coords()[(1 * 2 + 0) * 2 + 1] == 5);
  CHECK(BilinearTensor::from_coords(2, b.coords()) == b);
  CHECK(b.value(1, 0) == Vector{0, 5});
}

#include <doctest.h>

#include "bider/biderivations.hpp"
#include "bider/brackets.hpp"
#include "bider/derivations.hpp"
#include "bider/random.hpp"
#include "bider/suites.hpp"

using namespace bider;

namespace {

Vector e(std::size_t i) { return unit_vector(3, i - 1); }

BilinearTensor bracket_result() {
  BilinearTensor b(3);
  b.set_value(1, 0, Rational(-1) * e(1));
  return b;
}

}  // namespace

TEST_CASE("tensor embeddings round-trip") {
  const BilinearTensor b2 = heisenberg_b2();
  const PolyRightMap r = right_from_tensor(b2);
  const PolyLeftMap l = left_from_tensor(b2);
  CHECK(to_tensor(r) == b2);
  CHECK(to_tensor(l) == b2);
  for (std::size_t i = 1; i <= 3; ++i)
    for (std::size_t j = 1; j <= 3; ++j) {
      CHECK(r.evaluate(e(i), e(j)) == evaluate(b2, e(i), e(j)));
      CHECK(l.evaluate(e(i), e(j)) == evaluate(b2, e(i), e(j)));
    }
  CHECK(right_from_tensor(BilinearTensor(3)).is_zero());
  CHECK(to_tensor(PolyRightMap(3)) == BilinearTensor(3));

  PolyRightMap quad(3);
  quad.add_term(MultiIndex({2, 0, 0}), Matrix::identity(3));
  CHECK_THROWS_AS(to_tensor(quad), std::domain_error);
  PolyRightMap constant(3);
  constant.add_term(MultiIndex::zero(3), Matrix::identity(3));
  CHECK_THROWS_AS(to_tensor(constant), std::domain_error);
}

TEST_CASE("poly maps drop cancelled terms") {
  PolyRightMap p(2);
  p.add_term(MultiIndex({1, 0}), Matrix::identity(2));
  p.add_term(MultiIndex({1, 0}), Rational(-1) * Matrix::identity(2));
  CHECK(p.is_zero());
  CHECK(p.degree() == 0);
}

TEST_CASE("is_right_bider_poly") {
  const Algebra h = builtin("heisenberg3");
  PolyRightMap c(3);
  c.add_term(MultiIndex::zero(3), adjoint(h, e(1)));
  CHECK(is_right_bider_poly(h, c));
  CHECK(is_right_bider_poly(h, right_from_tensor(heisenberg_b1())));
  PolyRightMap bad(3);
  Matrix d = Matrix::zero(3, 3);
  d(0, 0) = 1;
  bad.add_term(MultiIndex({0, 1, 1}), d);
  CHECK_FALSE(is_right_bider_poly(h, bad));
}

TEST_CASE("coefficient criterion agrees with sampled slices") {
  const Algebra h = builtin("heisenberg3");
  Sampler s(41);
  for (int k = 0; k < 20; ++k) {
    PolyRightMap p = random_right_bider(h, s);
    // Half the time, spoil one coefficient with a random matrix.
    if (s.coin()) p.add_term(s.multi_index(3, 2), s.matrix(3));
    const bool criterion = is_right_bider_poly(h, p);
    bool sampled = true;
    for (int t = 0; t < 50; ++t) sampled = sampled && is_derivation(h, p.frozen(s.vector(3)));
    CHECK(criterion == sampled);
  }
}

TEST_CASE("rhd on the Heisenberg example") {
  const Algebra h = builtin("heisenberg3");
  const PolyRightMap r = rhd(right_from_tensor(heisenberg_b1()), right_from_tensor(heisenberg_b2()));
  CHECK(basis_values(r) == bracket_result());
  CHECK(is_right_bider_poly(h, r));

  // Full polynomial form, expanded independently with a computer algebra system.
  Sampler s(42);
  for (int k = 0; k < 20; ++k) {
    const Vector x = s.vector(3), y = s.vector(3);
    const Vector expected{-x[1] * y[0] * y[0] + x[1] * y[0] * y[1], 0,
                          -x[0] * y[0] * y[1] + x[1] * y[0] * y[1] - 2 * x[1] * y[0] * y[2] + x[1] * y[1] * y[2]};
    CHECK(r.evaluate(x, y) == expected);
  }
  CHECK(r.degree() == 2);
}

TEST_CASE("closed forms match the pointwise definitions") {
  Sampler s(43);
  for (const auto& name : {"heisenberg3", "sl2", "L4"}) {
    const Algebra a = builtin(name);
    const PolyRightMap b1 = random_right_bider(a, s), b2 = random_right_bider(a, s);
    const PolyRightMap r = rhd(b1, b2);
    const PolyLeftMap c1 = random_left_bider(a, s), c2 = random_left_bider(a, s);
    const PolyLeftMap l = lhd(c1, c2);
    for (int k = 0; k < 50; ++k) {
      const Vector x = s.vector(a.dim()), y = s.vector(a.dim());
      CHECK(r.evaluate(x, y) == b1.evaluate(b2.evaluate(x, y), y) - b2.evaluate(b1.evaluate(x, y), y));
      CHECK(l.evaluate(x, y) == c1.evaluate(x, c2.evaluate(x, y)) - c2.evaluate(x, c1.evaluate(x, y)));
    }
  }
}

TEST_CASE("alternativity and antisymmetry") {
  Sampler s(44);
  const Algebra h = builtin("heisenberg3");
  for (int k = 0; k < 10; ++k) {
    const PolyRightMap b = random_right_bider(h, s), c = random_right_bider(h, s);
    CHECK(rhd(b, b).is_zero());
    CHECK(rhd(b, c) == Rational(-1) * rhd(c, b));
    const PolyLeftMap l = random_left_bider(h, s);
    CHECK(lhd(l, l).is_zero());
  }
}

TEST_CASE("degree of a bracket term is the sum of degrees") {
  PolyRightMap a(2), b(2);
  const Matrix m{{0, 1}, {0, 0}}, n{{1, 0}, {0, 0}};
  a.add_term(MultiIndex({1, 1}), m);
  b.add_term(MultiIndex({0, 2}), n);
  const PolyRightMap r = rhd(a, b);
  REQUIRE(r.terms().size() == 1);
  CHECK(r.terms().begin()->first == MultiIndex({1, 3}));
  CHECK(r.terms().begin()->second == commutator(m, n));
}

TEST_CASE("Lie algebra checks") {
  for (const auto& name : {"heisenberg3", "abelian(3)", "L4"}) {
    CAPTURE(name);
    const Algebra a = builtin(name);
    const LieAlgebraCheck r = verify_lie_algebra(a, Side::right, 10, 0);
    const LieAlgebraCheck l = verify_lie_algebra(a, Side::left, 10, 0);
    CHECK(r.passed());
    CHECK(l.passed());
    CHECK(r.samples == 10);
  }
}

TEST_CASE("transpose identities") {
  for (const auto& name : {"heisenberg3", "abelian(2)", "sl2"}) {
    CAPTURE(name);
    const TransposeCheck t = verify_transpose_identities(builtin(name));
    CHECK(t.passed());
    CHECK(t.pairs > 0);
  }
  Sampler s(45);
  const Algebra h = builtin("heisenberg3");
  for (int k = 0; k < 10; ++k) {
    const PolyRightMap b1 = random_right_bider(h, s), b2 = random_right_bider(h, s);
    CHECK(rhd(b1, b2) == transpose(lhd(transpose(b1), transpose(b2))));
  }
}

TEST_CASE("fixed y: the bracket is the commutator of slices") {
  Sampler s(46);
  const Algebra a = builtin("sl2");
  for (int k = 0; k < 10; ++k) {
    const PolyRightMap b1 = random_right_bider(a, s), b2 = random_right_bider(a, s);
    const Vector y = s.vector(3);
    CHECK(rhd(b1, b2).frozen(y) == commutator(b1.frozen(y), b2.frozen(y)));
  }
}

TEST_CASE("brackets preserve the biderivation property") {
  Sampler s(47);
  for (const auto& name : builtin_names()) {
    const Algebra a = builtin(name);
    CHECK(is_right_bider_poly(a, rhd(random_right_bider(a, s), random_right_bider(a, s))));
    CHECK(is_left_bider_poly(a, lhd(random_left_bider(a, s), random_left_bider(a, s))));
  }
}

TEST_CASE("dimension mismatch") {
  CHECK_THROWS_AS(rhd(PolyRightMap(2), PolyRightMap(3)), std::invalid_argument);
}

#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "bider/brackets.hpp"
#include "bider/derivations.hpp"
#include "bider/random.hpp"
#include "bider/scalar_class.hpp"

using namespace bider;

namespace {

Vector e(std::size_t i) { return unit_vector(3, i - 1); }

ScalarTimesDerivation y2_ad_e1() {
  const Algebra h = builtin("heisenberg3");
  return {ScalarPoly::coordinate(3, 1), adjoint(h, e(1))};
}

ScalarPoly random_scalar(Sampler& s, std::size_t n) {
  ScalarPoly g(n);
  for (int t = s.integer(1, 3); t > 0; --t) g.add_term(s.multi_index(n, 2), s.nonzero_rational());
  return g;
}

}  // namespace

TEST_CASE("scalar polynomials") {
  ScalarPoly g = ScalarPoly::coordinate(3, 1);
  g += ScalarPoly::constant(3, 2);
  CHECK(g.evaluate(Vector{5, 7, 11}) == 9);
  const ScalarPoly sq = g * g;
  CHECK(sq.evaluate(Vector{5, 7, 11}) == 81);
  ScalarPoly z(3);
  z.add_term(MultiIndex({1, 0, 0}), 3);
  z.add_term(MultiIndex({1, 0, 0}), -3);
  CHECK(z.is_zero());
}

TEST_CASE("decomposition by basis") {
  const PolyRightMap b = to_poly_right(y2_ad_e1());
  const auto f = decompose_by_basis(b);
  REQUIRE(f.size() == 3);
  // f_2(y) = B(e2, y) = y2 [e1, e2] = y2 e3
  const Vector y{3, 5, 7};
  CHECK(f[1][0].evaluate(y) == 0);
  CHECK(f[1][2].evaluate(y) == 5);
  CHECK(f[0][2].is_zero());
  CHECK(reconstruct_from_basis_maps(f) == b);

  Sampler s(51);
  const Algebra h = builtin("heisenberg3");
  for (int k = 0; k < 10; ++k) {
    const PolyRightMap p = random_right_bider(h, s);
    const auto fs = decompose_by_basis(p);
    CHECK(reconstruct_from_basis_maps(fs) == p);
    const Vector x = s.vector(3), yy = s.vector(3);
    Vector sum = zero_vector(3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t c = 0; c < 3; ++c) sum[c] += x[i] * fs[i][c].evaluate(yy);
    CHECK(sum == p.evaluate(x, yy));
  }
}

TEST_CASE("to_poly_right") {
  const PolyRightMap b = to_poly_right(y2_ad_e1());
  CHECK(b.evaluate(e(2), Vector{0, 4, 0}) == Rational(4) * e(3));
  CHECK(b.evaluate(e(2), Vector{1, 0, 1}) == zero_vector(3));
}

TEST_CASE("g F is a right biderivation iff F is a derivation") {
  const Algebra h = builtin("heisenberg3");
  CHECK(iff_derivation_check(h, y2_ad_e1()).is_right_bider);
  Matrix d = Matrix::zero(3, 3);
  d(0, 0) = 1;
  const auto r = iff_derivation_check(h, {ScalarPoly::coordinate(3, 0), d});
  CHECK_FALSE(r.is_right_bider);
  CHECK(r.agrees());
  CHECK_THROWS_AS(iff_derivation_check(h, {ScalarPoly(3), d}), std::invalid_argument);

  Sampler s(52);
  std::size_t pairs = 0;
  for (const auto& name : {"heisenberg3", "sl2", "L4"}) {
    const Algebra a = builtin(name);
    const SubspaceBasis der = derivation_space(a);
    for (int k = 0; k < 40; ++k) {
      const ScalarPoly g = random_scalar(s, a.dim());
      if (g.is_zero()) continue;
      const Matrix f = s.coin() ? matrix_from_coords(a.dim(), s.element_of(der)) : s.matrix(a.dim());
      CHECK(iff_derivation_check(a, {g, f}).agrees());
      ++pairs;
    }
  }
  CHECK(pairs >= 100);
}

TEST_CASE("class bracket agrees with rhd") {
  const Algebra h = builtin("heisenberg3");
  Sampler s(53);
  const SubspaceBasis der = derivation_space(h);
  for (int k = 0; k < 20; ++k) {
    const ScalarTimesDerivation a{random_scalar(s, 3), matrix_from_coords(3, s.element_of(der))};
    const ScalarTimesDerivation b{random_scalar(s, 3), matrix_from_coords(3, s.element_of(der))};
    CHECK(to_poly_right(class_bracket(a, b)) == rhd(to_poly_right(a), to_poly_right(b)));
  }
  const auto c = class_bracket(y2_ad_e1(), y2_ad_e1());
  CHECK(c.f.is_zero());
}

TEST_CASE("exact exponential of a nilpotent derivation") {
  const Algebra h = builtin("heisenberg3");
  const Matrix ad1 = adjoint(h, e(1));
  const auto m = exact_exp_nilpotent(ad1, Rational(3, 2));
  REQUIRE(m.has_value());
  CHECK(*m == Matrix::identity(3) + Rational(3, 2) * ad1);
  CHECK(is_automorphism(h, *m));
  CHECK_FALSE(exact_exp_nilpotent(Matrix::identity(3), 1).has_value());
  CHECK_FALSE(is_automorphism(h, Matrix::zero(3, 3)));
}

TEST_CASE("exp curve for y2 ad(e1)") {
  const Algebra h = builtin("heisenberg3");
  const ExpCurveReport r = exp_curve_check(h, y2_ad_e1(), e(2), e(1) + e(2));
  CHECK(r.passed());
  CHECK(r.within_tolerance);
  CHECK(r.steps.back().error < 1e-6);
  // ad(e1) squares to zero, so the central difference carries no truncation error.
  CHECK(r.truncation_free);

  // Exact central difference with a rational step matches g(y) F x.
  const Rational hstep(1, 10000);
  const Matrix ad1 = adjoint(h, e(1));
  const Matrix plus = *exact_exp_nilpotent(ad1, hstep), minus = *exact_exp_nilpotent(ad1, -hstep);
  const Vector diff = (1 / (2 * hstep)) * (plus.apply(e(2)) - minus.apply(e(2)));
  CHECK(diff == ad1.apply(e(2)));
}

TEST_CASE("exp curve for F = 0 is exact") {
  const Algebra h = builtin("heisenberg3");
  const ExpCurveReport r = exp_curve_check(h, {ScalarPoly::coordinate(3, 0), Matrix::zero(3, 3)}, e(1), e(1));
  CHECK(r.passed());
  for (const auto& st : r.steps) CHECK(st.error == 0.0);
}

TEST_CASE("exp curve shows second-order decay for a non-nilpotent derivation") {
  const Algebra h = builtin("heisenberg3");
  const Matrix f{{1, 0, 0}, {0, 2, 0}, {0, 0, 3}};
  const ExpCurveReport r = exp_curve_check(h, {ScalarPoly::coordinate(3, 1), f}, e(1) + e(3), e(1) + e(2));
  CHECK(r.passed());
  CHECK_FALSE(r.truncation_free);
  bool measured = false;
  for (const auto& st : r.steps)
    if (st.ratio) {
      measured = true;
      CHECK(*st.ratio == doctest::Approx(4.0).epsilon(0.05));
    }
  CHECK(measured);

  // Reference: sinh(hF)/h applied to x, computed with Eigen directly for a diagonal F.
  const double hs = 1e-2;
  const Eigen::Vector3d lambda(1, 2, 3), x(1, 0, 1);
  Eigen::Vector3d cd;
  for (int i = 0; i < 3; ++i) cd[i] = std::sinh(hs * lambda[i]) / hs * x[i];
  const Eigen::Vector3d exact = lambda.cwiseProduct(x);
  const double rel = (cd - exact).lpNorm<Eigen::Infinity>() / exact.lpNorm<Eigen::Infinity>();
  CHECK(r.steps.front().error == doctest::Approx(rel).epsilon(1e-6));
}

TEST_CASE("exp curve errors") {
  const Algebra h = builtin("heisenberg3");
  Matrix d = Matrix::zero(3, 3);
  d(0, 0) = 1;
  CHECK_THROWS_AS(exp_curve_check(h, {ScalarPoly::coordinate(3, 0), d}, e(1), e(1)), std::invalid_argument);
  const Algebra l4 = builtin("L4");
  CHECK_THROWS_AS(exp_curve_check(l4, {ScalarPoly::coordinate(2, 0), Matrix::zero(2, 2)}, unit_vector(2, 0),
                                  unit_vector(2, 0)),
                  std::invalid_argument);
}

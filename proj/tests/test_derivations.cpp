#include <doctest.h>

#include "bider/derivations.hpp"
#include "bider/random.hpp"
#include "oracle.hpp"

using namespace bider;

namespace {

// Der(A) dimension from a system built by probing each elementary matrix
// E_rc with bracket(), then ranked with the test-side elimination.
std::size_t probed_derivation_dim(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<std::vector<Rational>> cols;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      Matrix d = Matrix::zero(n, n);
      d(r, c) = 1;
      std::vector<Rational> col;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const Vector x = unit_vector(n, i), y = unit_vector(n, j);
          const Vector res = d.apply(bracket(a, x, y)) - bracket(a, d.apply(x), y) - bracket(a, x, d.apply(y));
          col.insert(col.end(), res.begin(), res.end());
        }
      cols.push_back(col);
    }
  return n * n - oracle::rank_of_columns(cols);
}

}  // namespace

TEST_CASE("derivation dimensions agree with the probing oracle") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    const Algebra a = builtin(name);
    CHECK(derivation_space(a).dim() == probed_derivation_dim(a));
  }
  CHECK(derivation_space(builtin("heisenberg3")).dim() == 6);
  CHECK(derivation_space(builtin("sl2")).dim() == 3);
}

TEST_CASE("abelian algebras: every matrix is a derivation") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const Algebra a = builtin("abelian(" + std::to_string(n) + ")");
    CHECK(derivation_space(a).dim() == n * n);
  }
  Sampler s(5);
  CHECK(is_derivation(builtin("abelian(3)"), s.matrix(3)));
}

TEST_CASE("sl2 derivations are inner") {
  const Algebra sl2 = builtin("sl2");
  std::vector<Vector> ads;
  for (std::size_t i = 0; i < 3; ++i) ads.push_back(matrix_to_coords(adjoint(sl2, unit_vector(3, i))));
  CHECK(derivation_space(sl2) == canonicalize(9, ads));
}

TEST_CASE("is_derivation") {
  const Algebra h = builtin("heisenberg3");
  CHECK(is_derivation(h, Matrix::zero(3, 3)));
  CHECK(is_derivation(h, adjoint(h, unit_vector(3, 0))));
  // D = E_11: D[e1,e2] = D e3 = 0 but [D e1, e2] = e3.
  Matrix d = Matrix::zero(3, 3);
  d(0, 0) = 1;
  CHECK_FALSE(is_derivation(h, d));
  // diag(1,2,3) scales the grading.
  CHECK(is_derivation(h, Matrix{{1, 0, 0}, {0, 2, 0}, {0, 0, 3}}));
  CHECK_THROWS_AS(is_derivation(h, Matrix::zero(2, 2)), std::invalid_argument);
}

TEST_CASE("derivation basis elements pass the predicate") {
  for (const auto& name : builtin_names()) {
    const Algebra a = builtin(name);
    for (const auto& d : derivation_basis(a)) CHECK(is_derivation(a, d));
  }
}

TEST_CASE("commutators of derivations are derivations and satisfy Jacobi") {
  Sampler s(6);
  for (const auto& name : {"heisenberg3", "sl2", "L4", "L3"}) {
    const Algebra a = builtin(name);
    const SubspaceBasis der = derivation_space(a);
    const std::size_t n = a.dim();
    for (int k = 0; k < 10; ++k) {
      const Matrix d1 = matrix_from_coords(n, s.element_of(der));
      const Matrix d2 = matrix_from_coords(n, s.element_of(der));
      const Matrix d3 = matrix_from_coords(n, s.element_of(der));
      CHECK(is_derivation(a, commutator(d1, d2)));
      const Matrix j = commutator(d1, commutator(d2, d3)) + commutator(d2, commutator(d3, d1)) +
                       commutator(d3, commutator(d1, d2));
      CHECK(j.is_zero());
    }
  }
}

TEST_CASE("coordinate packing is column-major and invertible") {
  const Matrix m{{1, 2}, {3, 4}};
  CHECK(matrix_to_coords(m) == Vector{1, 3, 2, 4});
  CHECK(matrix_from_coords(2, matrix_to_coords(m)) == m);
}

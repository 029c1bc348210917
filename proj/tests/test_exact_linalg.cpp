#include <doctest.h>

#include "bider/linalg.hpp"
#include "bider/random.hpp"

using namespace bider;

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  CHECK(to_string(parse_rational("0/7")) == "0");
  CHECK(parse_rational("+2/3") == Rational(2, 3));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
}

TEST_CASE("element formatting") {
  CHECK(format_element({0, 0, 0}) == "0");
  CHECK(format_element({-1, 0, 0}) == "-e1");
  CHECK(format_element({2, 0, Rational(-1, 2)}) == "2*e1 - 1/2*e3");
  CHECK(format_element({0, 1, 1}) == "e2 + e3");
}

TEST_CASE("rref") {
  SUBCASE("identity") {
    const auto r = rref(Matrix::identity(3));
    CHECK(r.rank == 3);
    CHECK(r.form == Matrix::identity(3));
  }
  SUBCASE("zero") {
    const auto r = rref(Matrix::zero(2, 4));
    CHECK(r.rank == 0);
    CHECK(r.form == Matrix::zero(2, 4));
  }
  SUBCASE("rank one") {
    // R2 <- R2 - 2 R1
    const auto r = rref(Matrix{{1, 2}, {2, 4}});
    CHECK(r.rank == 1);
    CHECK(r.form == Matrix{{1, 2}, {0, 0}});
  }
  SUBCASE("fractions stay exact") {
    const auto r = rref(Matrix{{3, 1}, {1, 3}});
    CHECK(r.rank == 2);
    CHECK(r.form == Matrix::identity(2));
  }
}

TEST_CASE("nullspace") {
  CHECK(nullspace(Matrix::identity(4)).dim() == 0);
  CHECK(nullspace(Matrix::zero(1, 5)).dim() == 5);

  const Matrix m{{1, 1, 0}};
  const SubspaceBasis ns = nullspace(m);
  CHECK(ns.dim() == 2);
  CHECK(ns.ambient_dim == 3);
  for (const auto& v : ns.vectors) CHECK(is_zero(m.apply(v)));
}

TEST_CASE("canonicalize") {
  CHECK(canonicalize(2, {{2, 0}, {0, 3}}).vectors == std::vector<Vector>{{1, 0}, {0, 1}});
  CHECK(canonicalize(2, {{1, 1}, {2, 2}}).vectors == std::vector<Vector>{{1, 1}});
  // (1,2,3) - 2 (0,1,1) = (1,0,1)
  CHECK(canonicalize(3, {{1, 2, 3}, {0, 1, 1}}).vectors == std::vector<Vector>{{1, 0, 1}, {0, 1, 1}});
  CHECK(canonicalize(3, {}).dim() == 0);
}

TEST_CASE("subspace membership and intersection") {
  const SubspaceBasis xy = canonicalize(3, {{1, 0, 0}, {0, 1, 0}});
  const SubspaceBasis yz = canonicalize(3, {{0, 1, 0}, {0, 0, 1}});
  CHECK(contains(xy, {3, -2, 0}));
  CHECK_FALSE(contains(xy, {0, 0, 1}));
  CHECK(intersect(xy, yz) == canonicalize(3, {{0, 1, 0}}));
  CHECK(is_subspace(intersect(xy, yz), xy));
  CHECK(intersect(xy, canonicalize(3, {{0, 0, 1}})).dim() == 0);
}

TEST_CASE("nullspace property: m v = 0 and rank + nullity = cols") {
  Sampler s(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = static_cast<std::size_t>(s.integer(1, 6));
    const std::size_t cols = static_cast<std::size_t>(s.integer(1, 7));
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = s.integer(0, 2) == 0 ? Rational(0) : s.rational();
    // Duplicate a row now and then to force rank deficiency.
    if (rows > 1 && s.coin())
      for (std::size_t c = 0; c < cols; ++c) m(rows - 1, c) = 2 * m(0, c);
    const SubspaceBasis ns = nullspace(m);
    CHECK(rref(m).rank + ns.dim() == cols);
    for (const auto& v : ns.vectors) CHECK(is_zero(m.apply(v)));
  }
}

TEST_CASE("canonicalize property: idempotent and span-invariant") {
  Sampler s(12);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = static_cast<std::size_t>(s.integer(1, 6));
    std::vector<Vector> vs;
    for (int k = s.integer(0, 4); k > 0; --k) vs.push_back(s.vector(n));
    const SubspaceBasis c = canonicalize(n, vs);
    CHECK(canonicalize(n, c.vectors) == c);

    auto extended = vs;
    Vector comb = zero_vector(n);
    for (const auto& v : vs) comb = comb + s.rational() * v;
    extended.push_back(comb);
    CHECK(canonicalize(n, extended) == c);

    // Pivot structure: leading 1, strictly increasing, zero elsewhere in the column.
    std::size_t last = 0;
    for (std::size_t r = 0; r < c.dim(); ++r) {
      std::size_t p = 0;
      while (c.vectors[r][p] == 0) ++p;
      CHECK(c.vectors[r][p] == 1);
      if (r > 0) CHECK(p > last);
      last = p;
      for (std::size_t q = 0; q < c.dim(); ++q)
        if (q != r) CHECK(c.vectors[q][p] == 0);
    }
  }
}

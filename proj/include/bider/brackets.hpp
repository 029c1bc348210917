#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "bider/algebra.hpp"
#include "bider/poly.hpp"

namespace bider {

/// B1 |> B2 (x, y) = B1(B2(x, y), y) - B2(B1(x, y), y), in closed form:
/// each pair of terms y^a M_a, y^b N_b contributes y^(a+b) (M_a N_b - N_b M_a).
PolyRightMap rhd(const PolyRightMap& b1, const PolyRightMap& b2);

/// B1 <| B2 (x, y) = B1(x, B2(x, y)) - B2(x, B1(x, y)); same closed form in x.
PolyLeftMap lhd(const PolyLeftMap& b1, const PolyLeftMap& b2);

/// Every coefficient matrix is a derivation. Over Q (an infinite field) the
/// monomials y^a are linearly independent functions, so this is equivalent
/// to B(-, y) being a derivation for every y.
bool is_right_bider_poly(const Algebra& a, const PolyRightMap& b);
bool is_left_bider_poly(const Algebra& a, const PolyLeftMap& b);

/// Random right (left) biderivation: a rational combination of the bilinear
/// basis plus up to two terms of degree <= 2 with random derivation coefficients.
PolyRightMap random_right_bider(const Algebra& a, class Sampler& sampler);
PolyLeftMap random_left_bider(const Algebra& a, class Sampler& sampler);

struct LieAlgebraCheck {
  Side side = Side::right;
  std::size_t samples = 0;
  std::size_t closure_failures = 0;
  std::size_t bilinearity_failures = 0;
  std::size_t alternativity_failures = 0;
  std::size_t jacobi_failures = 0;
  std::optional<std::string> witness;

  bool passed() const {
    return closure_failures + bilinearity_failures + alternativity_failures + jacobi_failures == 0;
  }
};

/// Draws `samples` random triples and checks closure, bilinearity in both
/// slots, alternativity and the Jacobi sum, all exactly.
LieAlgebraCheck verify_lie_algebra(const Algebra& a, Side side, std::size_t samples, std::uint64_t seed);

struct TransposeCheck {
  std::size_t pairs = 0;
  std::size_t transpose_failures = 0;       // B1|>B2 = (B1^t <| B2^t)^t
  std::size_t same_symmetry_failures = 0;   // sym/sym and skew/skew
  std::size_t mixed_symmetry_failures = 0;  // sym/skew and skew/sym
  std::optional<std::string> witness;

  bool passed() const { return transpose_failures + same_symmetry_failures + mixed_symmetry_failures == 0; }
};

/// Exhaustive over pairs of the canonical right-biderivation basis:
///   B1 |> B2 = (B1^t <| B2^t)^t;
///   for S1, S2 both symmetrized or both skew-symmetrized, S1|>S2(x,y) = S1<|S2(y,x);
///   for one of each, S1|>S2(x,y) = S2<|S1(y,x).
/// Equalities are checked as exact polynomial maps and on every basis pair.
TransposeCheck verify_transpose_identities(const Algebra& a);

}  // namespace bider

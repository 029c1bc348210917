#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bider/algebra.hpp"
#include "bider/poly.hpp"

namespace bider {

/// Polynomial function g(y) = sum_a c_a y^a with rational coefficients.
class ScalarPoly {
 public:
  ScalarPoly() = default;
  explicit ScalarPoly(std::size_t dim) : dim_(dim) {}

  static ScalarPoly constant(std::size_t dim, const Rational& c);
  /// g(y) = y_i
  static ScalarPoly coordinate(std::size_t dim, std::size_t i);

  std::size_t dim() const { return dim_; }
  const std::map<MultiIndex, Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  void add_term(const MultiIndex& index, const Rational& c);

  Rational evaluate(const Vector& y) const;
  double evaluate(const std::vector<double>& y) const;

  ScalarPoly& operator+=(const ScalarPoly& o);
  friend ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b);
  friend bool operator==(const ScalarPoly&, const ScalarPoly&) = default;

 private:
  std::size_t dim_ = 0;
  std::map<MultiIndex, Rational> coeffs_;
};

/// B(x, y) = g(y) F(x).
struct ScalarTimesDerivation {
  ScalarPoly g;
  Matrix f;
};

/// One map f_i : y -> B(e_i, y), stored as n scalar polynomial components.
using VectorPoly = std::vector<ScalarPoly>;

/// f_i(y) = B(e_i, y) for i = 1..n.
std::vector<VectorPoly> decompose_by_basis(const PolyRightMap& b);
/// B(x, y) = sum_i x_i f_i(y).
PolyRightMap reconstruct_from_basis_maps(const std::vector<VectorPoly>& maps);

PolyRightMap to_poly_right(const ScalarTimesDerivation& s);

struct IffDerivationResult {
  bool is_right_bider = false;
  bool f_is_derivation = false;

  bool agrees() const { return is_right_bider == f_is_derivation; }
};

/// Compares "g(y)F(x) is a right biderivation" with "F is a derivation".
/// Throws std::invalid_argument when g is identically zero: then B = 0 is a
/// right biderivation for every F and the equivalence does not apply.
IffDerivationResult iff_derivation_check(const Algebra& a, const ScalarTimesDerivation& s);

/// (g1 g2, [F1, F2]).
ScalarTimesDerivation class_bracket(const ScalarTimesDerivation& s1, const ScalarTimesDerivation& s2);

/// exp(sF) as an exact truncated series when F is nilpotent; nullopt otherwise.
std::optional<Matrix> exact_exp_nilpotent(const Matrix& f, const Rational& s);
/// M[x, y] = [Mx, My] on basis pairs and M invertible.
bool is_automorphism(const Algebra& a, const Matrix& m);

struct ExpCurveOptions {
  std::vector<double> steps{1e-2, 1e-3, 1e-4};
  double tolerance = 1e-6;
};

struct ExpCurveStep {
  double h = 0;
  double error = 0;        // relative (absolute when the reference is zero)
  double error_half = 0;   // same at h/2
  std::optional<double> ratio;  // error / error_half when above the rounding floor
};

struct ExpCurveReport {
  std::vector<ExpCurveStep> steps;
  bool within_tolerance = false;  // at the smallest h
  bool second_order = false;      // every measurable ratio in [3.5, 4.5]
  bool truncation_free = false;   // no ratio measurable: the differences are exact up to rounding

  bool passed() const { return within_tolerance && second_order; }
};

/// Central differences of s -> g(y) exp(sF) x at s = 0 compared with
/// g(y) F x. Floating point is used here and nowhere else. Throws
/// std::invalid_argument if F is not a derivation or A is not declared Lie.
ExpCurveReport exp_curve_check(const Algebra& a, const ScalarTimesDerivation& s, const Vector& x, const Vector& y,
                               const ExpCurveOptions& options = {});

}  // namespace bider

#include "bider/scalar_class.hpp"

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "bider/brackets.hpp"
#include "bider/derivations.hpp"
#include "bider/linalg.hpp"

namespace bider {

ScalarPoly ScalarPoly::constant(std::size_t dim, const Rational& c) {
  ScalarPoly p(dim);
  p.add_term(MultiIndex::zero(dim), c);
  return p;
}

ScalarPoly ScalarPoly::coordinate(std::size_t dim, std::size_t i) {
  ScalarPoly p(dim);
  p.add_term(MultiIndex::unit(dim, i), 1);
  return p;
}

void ScalarPoly::add_term(const MultiIndex& index, const Rational& c) {
  if (index.size() != dim_) throw std::invalid_argument("monomial arity differs from polynomial dimension");
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(index, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

Rational ScalarPoly::evaluate(const Vector& y) const {
  Rational v = 0;
  for (const auto& [index, c] : coeffs_) v += c * index.evaluate(y);
  return v;
}

double ScalarPoly::evaluate(const std::vector<double>& y) const {
  double v = 0;
  for (const auto& [index, c] : coeffs_) v += c.get_d() * index.evaluate(y);
  return v;
}

ScalarPoly& ScalarPoly::operator+=(const ScalarPoly& o) {
  for (const auto& [index, c] : o.coeffs_) add_term(index, c);
  return *this;
}

ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("polynomial dimension mismatch");
  ScalarPoly p(a.dim_);
  for (const auto& [ia, ca] : a.coeffs_)
    for (const auto& [ib, cb] : b.coeffs_) p.add_term(ia + ib, ca * cb);
  return p;
}

std::vector<VectorPoly> decompose_by_basis(const PolyRightMap& b) {
  const std::size_t n = b.dim();
  std::vector<VectorPoly> maps(n, VectorPoly(n, ScalarPoly(n)));
  for (const auto& [index, m] : b.terms())
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) maps[i][k].add_term(index, m(k, i));
  return maps;
}

PolyRightMap reconstruct_from_basis_maps(const std::vector<VectorPoly>& maps) {
  const std::size_t n = maps.size();
  PolyRightMap b(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (maps[i].size() != n) throw std::invalid_argument("each basis map needs n components");
    for (std::size_t k = 0; k < n; ++k)
      for (const auto& [index, c] : maps[i][k].coefficients()) {
        Matrix m(n, n);
        m(k, i) = c;
        b.add_term(index, m);
      }
  }
  return b;
}

PolyRightMap to_poly_right(const ScalarTimesDerivation& s) {
  const std::size_t n = s.f.rows();
  if (s.g.dim() != n || s.f.cols() != n) throw std::invalid_argument("g and F dimensions differ");
  PolyRightMap b(n);
  for (const auto& [index, c] : s.g.coefficients()) b.add_term(index, c * s.f);
  return b;
}

IffDerivationResult iff_derivation_check(const Algebra& a, const ScalarTimesDerivation& s) {
  if (s.g.is_zero()) throw std::invalid_argument("g is identically zero");
  const PolyRightMap b = to_poly_right(s);
  IffDerivationResult r;
  r.f_is_derivation = is_derivation(a, s.f);
  r.is_right_bider = is_right_bider_poly(a, b);
  return r;
}

ScalarTimesDerivation class_bracket(const ScalarTimesDerivation& s1, const ScalarTimesDerivation& s2) {
  return {s1.g * s2.g, commutator(s1.f, s2.f)};
}

std::optional<Matrix> exact_exp_nilpotent(const Matrix& f, const Rational& s) {
  const std::size_t n = f.rows();
  Matrix result = Matrix::identity(n);
  Matrix power = Matrix::identity(n);  // (sF)^k / k!
  for (std::size_t k = 1; k <= n; ++k) {
    power = (s / Rational(static_cast<long>(k))) * (power * f);
    if (power.is_zero()) return result;
    result += power;
  }
  return std::nullopt;  // F^n != 0
}

bool is_automorphism(const Algebra& a, const Matrix& m) {
  const std::size_t n = a.dim();
  if (rref(m).rank != n) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector x = unit_vector(n, i);
      const Vector y = unit_vector(n, j);
      if (m.apply(bracket(a, x, y)) != bracket(a, m.apply(x), m.apply(y))) return false;
    }
  return true;
}

namespace {

Eigen::MatrixXd to_eigen(const Matrix& m) {
  Eigen::MatrixXd e(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) e(r, c) = m(r, c).get_d();
  return e;
}

Eigen::VectorXd to_eigen(const Vector& v) {
  Eigen::VectorXd e(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) e(i) = v[i].get_d();
  return e;
}

}  // namespace

ExpCurveReport exp_curve_check(const Algebra& a, const ScalarTimesDerivation& s, const Vector& x, const Vector& y,
                               const ExpCurveOptions& options) {
  if (a.kind != Kind::lie) throw std::invalid_argument("exp curve check needs a Lie algebra");
  if (!is_derivation(a, s.f)) throw std::invalid_argument("F is not a derivation");
  if (options.steps.empty()) throw std::invalid_argument("no step sizes given");

  const Eigen::MatrixXd f = to_eigen(s.f);
  const Eigen::VectorXd xd = to_eigen(x);
  std::vector<double> yd(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) yd[i] = y[i].get_d();
  const double gy = s.g.evaluate(yd);
  const Eigen::VectorXd reference = gy * (f * xd);
  const double scale = reference.lpNorm<Eigen::Infinity>();

  const auto relative_error = [&](double h) {
    const Eigen::MatrixXd plus = (h * f).exp();
    const Eigen::MatrixXd minus = (-h * f).exp();
    const Eigen::VectorXd approx = gy * ((plus - minus) * xd) / (2.0 * h);
    const double err = (approx - reference).lpNorm<Eigen::Infinity>();
    return scale == 0.0 ? err : err / scale;
  };

  ExpCurveReport report;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  std::size_t measured = 0;
  bool ratios_ok = true;
  for (double h : options.steps) {
    ExpCurveStep step;
    step.h = h;
    step.error = relative_error(h);
    step.error_half = relative_error(h / 2);
    // Rounding in the difference quotient is about eps |g(y)| |x| / h.
    const double noise = eps * std::abs(gy) * xd.lpNorm<Eigen::Infinity>() / (h / 2);
    const double floor = 100.0 * (scale > 0.0 ? noise / scale : noise);
    if (step.error_half > floor) {
      step.ratio = step.error / step.error_half;
      ++measured;
      if (*step.ratio < 3.5 || *step.ratio > 4.5) ratios_ok = false;
    }
    report.steps.push_back(step);
  }
  const auto smallest = std::min_element(report.steps.begin(), report.steps.end(),
                                         [](const auto& l, const auto& r) { return l.h < r.h; });
  report.within_tolerance = smallest->error <= options.tolerance;
  report.truncation_free = measured == 0;
  report.second_order = ratios_ok;
  return report;
}

}  // namespace bider

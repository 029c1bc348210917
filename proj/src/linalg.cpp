#include "bider/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace bider {

RrefResult rref(Matrix m) {
  RrefResult out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t sel = pivot_row;
    while (sel < rows && m(sel, c) == 0) ++sel;
    if (sel == rows) continue;
    if (sel != pivot_row) {
      for (std::size_t k = c; k < cols; ++k) swap(m(sel, k), m(pivot_row, k));
    }
    const Rational inv = 1 / m(pivot_row, c);
    for (std::size_t k = c; k < cols; ++k) m(pivot_row, k) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || m(r, c) == 0) continue;
      const Rational f = m(r, c);
      for (std::size_t k = c; k < cols; ++k) {
        if (m(pivot_row, k) != 0) m(r, k) -= f * m(pivot_row, k);
      }
    }
    out.pivots.push_back(c);
    ++pivot_row;
  }
  out.rank = pivot_row;
  out.form = std::move(m);
  return out;
}

SubspaceBasis canonicalize(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  Matrix m(vectors.size(), ambient_dim);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    if (vectors[r].size() != ambient_dim) throw std::invalid_argument("vector length differs from ambient dimension");
    for (std::size_t c = 0; c < ambient_dim; ++c) m(r, c) = vectors[r][c];
  }
  const RrefResult red = rref(std::move(m));
  SubspaceBasis basis{ambient_dim, {}};
  basis.vectors.reserve(red.rank);
  for (std::size_t r = 0; r < red.rank; ++r) basis.vectors.push_back(red.form.row(r));
  return basis;
}

SubspaceBasis nullspace(const Matrix& m) {
  const RrefResult red = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : red.pivots) is_pivot[p] = true;

  std::vector<Vector> vectors;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(cols);
    v[free] = 1;
    for (std::size_t r = 0; r < red.rank; ++r) v[red.pivots[r]] = -red.form(r, free);
    vectors.push_back(std::move(v));
  }
  return canonicalize(cols, vectors);
}

bool contains(const SubspaceBasis& space, const Vector& v) {
  if (v.size() != space.ambient_dim) throw std::invalid_argument("vector length differs from ambient dimension");
  // Reduce v against the RREF rows using their pivots.
  Vector rest = v;
  for (const auto& b : space.vectors) {
    std::size_t p = 0;
    while (b[p] == 0) ++p;
    if (rest[p] == 0) continue;
    const Rational f = rest[p];
    for (std::size_t k = p; k < rest.size(); ++k) rest[k] -= f * b[k];
  }
  return is_zero(rest);
}

bool is_subspace(const SubspaceBasis& inner, const SubspaceBasis& outer) {
  for (const auto& v : inner.vectors) {
    if (!contains(outer, v)) return false;
  }
  return true;
}

namespace {

// Rows c with c . v = 0 for all v in the space; the space is their common kernel.
Matrix annihilator(const SubspaceBasis& s) {
  Matrix rows(s.vectors.size(), s.ambient_dim);
  for (std::size_t r = 0; r < s.vectors.size(); ++r)
    for (std::size_t c = 0; c < s.ambient_dim; ++c) rows(r, c) = s.vectors[r][c];
  const SubspaceBasis perp = nullspace(rows);
  Matrix out(perp.dim(), s.ambient_dim);
  for (std::size_t r = 0; r < perp.dim(); ++r)
    for (std::size_t c = 0; c < s.ambient_dim; ++c) out(r, c) = perp.vectors[r][c];
  return out;
}

}  // namespace

SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient_dim != b.ambient_dim) throw std::invalid_argument("ambient dimension mismatch");
  const Matrix ca = annihilator(a);
  const Matrix cb = annihilator(b);
  Matrix stacked(ca.rows() + cb.rows(), a.ambient_dim);
  for (std::size_t r = 0; r < ca.rows(); ++r)
    for (std::size_t c = 0; c < a.ambient_dim; ++c) stacked(r, c) = ca(r, c);
  for (std::size_t r = 0; r < cb.rows(); ++r)
    for (std::size_t c = 0; c < a.ambient_dim; ++c) stacked(ca.rows() + r, c) = cb(r, c);
  return nullspace(stacked);
}

Vector combine(const SubspaceBasis& basis, const std::vector<Rational>& coeffs) {
  if (coeffs.size() != basis.dim()) throw std::invalid_argument("coefficient count differs from basis size");
  Vector v = zero_vector(basis.ambient_dim);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    for (std::size_t k = 0; k < v.size(); ++k) v[k] += coeffs[i] * basis.vectors[i][k];
  }
  return v;
}

}  // namespace bider

#include "bider/derivations.hpp"

#include <stdexcept>

namespace bider {

bool is_derivation(const Algebra& a, const Matrix& d) {
  const std::size_t n = a.dim();
  if (d.rows() != n || d.cols() != n) throw std::invalid_argument("derivation matrix must be n x n");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector x = unit_vector(n, i);
      const Vector y = unit_vector(n, j);
      const Vector lhs = d.apply(bracket(a, x, y));
      const Vector rhs = bracket(a, d.apply(x), y) + bracket(a, x, d.apply(y));
      if (lhs != rhs) return false;
    }
  return true;
}

Matrix derivation_system(const Algebra& a) {
  const std::size_t n = a.dim();
  const auto unknown = [n](std::size_t r, std::size_t c) { return c * n + r; };
  const bool lie = a.kind == Kind::lie;

  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = lie ? i + 1 : 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector row = zero_vector(n * n);
        // D[e_i,e_j]_k = sum_m c[i][j][m] d[k][m]
        for (std::size_t m = 0; m < n; ++m) row[unknown(k, m)] += a.constant(i, j, m);
        // [D e_i, e_j]_k = sum_r d[r][i] c[r][j][k]
        for (std::size_t r = 0; r < n; ++r) row[unknown(r, i)] -= a.constant(r, j, k);
        // [e_i, D e_j]_k = sum_r d[r][j] c[i][r][k]
        for (std::size_t r = 0; r < n; ++r) row[unknown(r, j)] -= a.constant(i, r, k);
        rows.push_back(std::move(row));
      }

  Matrix m(rows.size(), n * n);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < n * n; ++c) m(r, c) = rows[r][c];
  return m;
}

SubspaceBasis derivation_space(const Algebra& a) {
  return nullspace(derivation_system(a));
}

std::vector<Matrix> derivation_basis(const Algebra& a) {
  std::vector<Matrix> out;
  for (const auto& v : derivation_space(a).vectors) out.push_back(matrix_from_coords(a.dim(), v));
  return out;
}

Vector matrix_to_coords(const Matrix& m) {
  const std::size_t n = m.rows();
  Vector v(n * n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) v[c * n + r] = m(r, c);
  return v;
}

Matrix matrix_from_coords(std::size_t n, const Vector& coords) {
  if (coords.size() != n * n) throw std::invalid_argument("matrix coordinate length must be n^2");
  Matrix m(n, n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) m(r, c) = coords[c * n + r];
  return m;
}

}  // namespace bider

#include "bider/biderivations.hpp"

#include <stdexcept>

#include "bider/derivations.hpp"

namespace bider {

namespace {

void require_dims(const Algebra& a, const BilinearTensor& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("tensor and algebra dimensions differ");
}

template <typename Condition>
std::vector<TripleWitness> witnesses(const Algebra& a, const BilinearTensor& b, Condition cond, bool stop_at_first) {
  require_dims(a, b);
  const std::size_t n = a.dim();
  std::vector<TripleWitness> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        auto [lhs, rhs] = cond(unit_vector(n, i), unit_vector(n, j), unit_vector(n, k));
        if (lhs != rhs) {
          out.push_back({i, j, k, std::move(lhs), std::move(rhs)});
          if (stop_at_first) return out;
        }
      }
  return out;
}

std::vector<TripleWitness> right_impl(const Algebra& a, const BilinearTensor& b, bool first) {
  return witnesses(a, b, [&](const Vector& x, const Vector& y, const Vector& z) {
    return std::pair{evaluate(b, bracket(a, x, y), z),
                     bracket(a, x, evaluate(b, y, z)) + bracket(a, evaluate(b, x, z), y)};
  }, first);
}

std::vector<TripleWitness> left_impl(const Algebra& a, const BilinearTensor& b, bool first) {
  return witnesses(a, b, [&](const Vector& x, const Vector& y, const Vector& z) {
    return std::pair{evaluate(b, x, bracket(a, y, z)),
                     bracket(a, evaluate(b, x, y), z) + bracket(a, y, evaluate(b, x, z))};
  }, first);
}

Matrix to_matrix(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  return m;
}

}  // namespace

bool is_right_bider(const Algebra& a, const BilinearTensor& b) {
  return right_impl(a, b, true).empty();
}

bool is_left_bider(const Algebra& a, const BilinearTensor& b) {
  return left_impl(a, b, true).empty();
}

bool is_bider(const Algebra& a, const BilinearTensor& b) {
  return is_right_bider(a, b) && is_left_bider(a, b);
}

std::vector<TripleWitness> right_bider_witnesses(const Algebra& a, const BilinearTensor& b) {
  return right_impl(a, b, false);
}

std::vector<TripleWitness> left_bider_witnesses(const Algebra& a, const BilinearTensor& b) {
  return left_impl(a, b, false);
}

Matrix right_bider_system(const Algebra& a) {
  const std::size_t n = a.dim();
  const auto t = [n](std::size_t i, std::size_t j, std::size_t k) { return (i * n + j) * n + k; };
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t m = 0; m < n; ++m) {
          Vector row = zero_vector(n * n * n);
          // B([e_i,e_j], e_k)_m
          for (std::size_t p = 0; p < n; ++p) row[t(p, k, m)] += a.constant(i, j, p);
          // [e_i, B(e_j,e_k)]_m
          for (std::size_t q = 0; q < n; ++q) row[t(j, k, q)] -= a.constant(i, q, m);
          // [B(e_i,e_k), e_j]_m
          for (std::size_t q = 0; q < n; ++q) row[t(i, k, q)] -= a.constant(q, j, m);
          if (!is_zero(row)) rows.push_back(std::move(row));
        }
  return to_matrix(rows, n * n * n);
}

Matrix left_bider_system(const Algebra& a) {
  const std::size_t n = a.dim();
  const auto t = [n](std::size_t i, std::size_t j, std::size_t k) { return (i * n + j) * n + k; };
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t m = 0; m < n; ++m) {
          Vector row = zero_vector(n * n * n);
          // B(e_i, [e_j,e_k])_m
          for (std::size_t p = 0; p < n; ++p) row[t(i, p, m)] += a.constant(j, k, p);
          // [B(e_i,e_j), e_k]_m
          for (std::size_t q = 0; q < n; ++q) row[t(i, j, q)] -= a.constant(q, k, m);
          // [e_j, B(e_i,e_k)]_m
          for (std::size_t q = 0; q < n; ++q) row[t(i, k, q)] -= a.constant(j, q, m);
          if (!is_zero(row)) rows.push_back(std::move(row));
        }
  return to_matrix(rows, n * n * n);
}

SubspaceBasis right_bider_bilinear_space(const Algebra& a) {
  return nullspace(right_bider_system(a));
}

SubspaceBasis left_bider_bilinear_space(const Algebra& a) {
  return nullspace(left_bider_system(a));
}

SubspaceBasis bider_space(const Algebra& a) {
  const Matrix right = right_bider_system(a);
  const Matrix left = left_bider_system(a);
  Matrix both(right.rows() + left.rows(), right.cols());
  for (std::size_t r = 0; r < right.rows(); ++r)
    for (std::size_t c = 0; c < right.cols(); ++c) both(r, c) = right(r, c);
  for (std::size_t r = 0; r < left.rows(); ++r)
    for (std::size_t c = 0; c < left.cols(); ++c) both(right.rows() + r, c) = left(r, c);
  return nullspace(both);
}

SubspaceBasis right_bider_space_from_derivations(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<Vector> spanning;
  for (const Matrix& d : derivation_basis(a))
    for (std::size_t j = 0; j < n; ++j) {
      BilinearTensor b(n);
      // B(e_i, e_j) = D e_i
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) b.at(i, j, k) = d(k, i);
      spanning.push_back(b.coords());
    }
  return canonicalize(n * n * n, spanning);
}

SubspaceBasis left_bider_space_from_derivations(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<Vector> spanning;
  for (const Matrix& d : derivation_basis(a))
    for (std::size_t i = 0; i < n; ++i) {
      BilinearTensor b(n);
      // B(e_i, e_j) = D e_j
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) b.at(i, j, k) = d(k, j);
      spanning.push_back(b.coords());
    }
  return canonicalize(n * n * n, spanning);
}

std::vector<BilinearTensor> tensors_of(std::size_t dim, const SubspaceBasis& space) {
  std::vector<BilinearTensor> out;
  out.reserve(space.dim());
  for (const auto& v : space.vectors) out.push_back(BilinearTensor::from_coords(dim, v));
  return out;
}

Matrix right_slice(const BilinearTensor& b, const Vector& y) {
  const std::size_t n = b.dim();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector col = evaluate(b, unit_vector(n, i), y);
    for (std::size_t k = 0; k < n; ++k) m(k, i) = col[k];
  }
  return m;
}

Matrix left_slice(const BilinearTensor& b, const Vector& x) {
  const std::size_t n = b.dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Vector col = evaluate(b, x, unit_vector(n, j));
    for (std::size_t k = 0; k < n; ++k) m(k, j) = col[k];
  }
  return m;
}

}  // namespace bider

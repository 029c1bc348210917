#pragma once

#include <cstddef>
#include <vector>

#include "bider/matrix.hpp"

namespace bider {

struct RrefResult {
  Matrix form;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form by exact Gauss-Jordan elimination.
RrefResult rref(Matrix m);

/// A subspace of Q^ambient_dim held in canonical form: the vectors are the
/// nonzero rows of an RREF matrix, so two subspaces are equal iff their
/// bases compare equal.
struct SubspaceBasis {
  std::size_t ambient_dim = 0;
  std::vector<Vector> vectors;

  std::size_t dim() const { return vectors.size(); }
  friend bool operator==(const SubspaceBasis&, const SubspaceBasis&) = default;
};

/// Basis of {v : m v = 0}, canonicalized.
SubspaceBasis nullspace(const Matrix& m);

/// Canonical basis of span(vectors). Every vector must have length ambient_dim.
SubspaceBasis canonicalize(std::size_t ambient_dim, const std::vector<Vector>& vectors);

bool contains(const SubspaceBasis& space, const Vector& v);
bool is_subspace(const SubspaceBasis& inner, const SubspaceBasis& outer);
SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b);

/// Linear combination sum_i coeffs[i] * basis.vectors[i].
Vector combine(const SubspaceBasis& basis, const std::vector<Rational>& coeffs);

}  // namespace bider

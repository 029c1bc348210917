#pragma once

#include <vector>

#include "bider/algebra.hpp"
#include "bider/linalg.hpp"

namespace bider {

/// D[x,y] = [Dx,y] + [x,Dy] on all basis pairs. Throws on a non n x n matrix.
bool is_derivation(const Algebra& a, const Matrix& d);

/// The Leibniz-rule system in n^2 unknowns (column-major entries of D).
/// Rows: basis pairs (i,j) in lexicographic order, i < j for Lie kind and
/// every ordered pair otherwise; one row per output component.
Matrix derivation_system(const Algebra& a);

/// Canonical basis of Der(A) in column-major coordinates.
SubspaceBasis derivation_space(const Algebra& a);

/// derivation_space() unpacked into matrices.
std::vector<Matrix> derivation_basis(const Algebra& a);

/// Column-major packing: coordinate c*n + r holds entry (r, c).
Vector matrix_to_coords(const Matrix& m);
Matrix matrix_from_coords(std::size_t n, const Vector& coords);

}  // namespace bider

#pragma once

#include <optional>
#include <vector>

#include "bider/algebra.hpp"
#include "bider/bilinear.hpp"
#include "bider/linalg.hpp"

namespace bider {

/// A basis triple (x, y, z) = (e_i, e_j, e_k) at which a biderivation
/// condition fails. Residual is rhs - lhs.
struct TripleWitness {
  std::size_t i = 0, j = 0, k = 0;
  Vector lhs;
  Vector rhs;

  Vector residual() const { return rhs - lhs; }
};

/// B([x,y],z) = [x,B(y,z)] + [B(x,z),y] on all basis triples.
bool is_right_bider(const Algebra& a, const BilinearTensor& b);
/// B(x,[y,z]) = [B(x,y),z] + [y,B(x,z)] on all basis triples.
bool is_left_bider(const Algebra& a, const BilinearTensor& b);
/// Both of the above.
bool is_bider(const Algebra& a, const BilinearTensor& b);

/// Every failing basis triple in lexicographic order.
std::vector<TripleWitness> right_bider_witnesses(const Algebra& a, const BilinearTensor& b);
std::vector<TripleWitness> left_bider_witnesses(const Algebra& a, const BilinearTensor& b);

/// Condition systems over the n^3 tensor unknowns t[i][j][k] (flat index
/// (i*n+j)*n+k). Rows run over basis triples (i,j,k) lexicographically,
/// then over the output component.
Matrix right_bider_system(const Algebra& a);
Matrix left_bider_system(const Algebra& a);

SubspaceBasis right_bider_bilinear_space(const Algebra& a);
SubspaceBasis left_bider_bilinear_space(const Algebra& a);
/// Solves both condition families at once.
SubspaceBasis bider_space(const Algebra& a);

/// Bilinear right biderivations built from Der(A): B is one iff every
/// B(-, e_j) is a derivation, so the space is spanned by the tensors placing
/// a Der basis element in slot j. Independent of the triple-condition system.
SubspaceBasis right_bider_space_from_derivations(const Algebra& a);
/// Mirror: every B(e_i, -) is a derivation.
SubspaceBasis left_bider_space_from_derivations(const Algebra& a);

/// Tensors (un)packed from SubspaceBasis coordinates.
std::vector<BilinearTensor> tensors_of(std::size_t dim, const SubspaceBasis& space);

/// Derivation B(-, y) and B(x, -) of a bilinear tensor as matrices.
Matrix right_slice(const BilinearTensor& b, const Vector& y);
Matrix left_slice(const BilinearTensor& b, const Vector& x);

}  // namespace bider

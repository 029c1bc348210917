#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bider/bilinear.hpp"
#include "bider/matrix.hpp"

namespace bider {

enum class Kind { lie, leibniz_left, leibniz_right, generic };

std::string_view to_string(Kind kind);
/// Accepts `lie`, `leibniz-left`, `leibniz-right`, `generic`.
std::optional<Kind> parse_kind(std::string_view text);

/// Finite-dimensional algebra given by structure constants
/// [e_i, e_j] = sum_k c[i][j][k] e_k. The constants are stored in full, so
/// non-antisymmetric (Leibniz, generic) products fit the same type. The
/// declared kind is a claim that check_kind() verifies; it is never inferred.
struct Algebra {
  std::string name;
  Kind kind = Kind::generic;
  BilinearTensor product;

  std::size_t dim() const { return product.dim(); }
  const Rational& constant(std::size_t i, std::size_t j, std::size_t k) const { return product.at(i, j, k); }
};

Algebra make_algebra(std::string name, std::size_t dim, Kind kind);

/// Same constants and kind; names are ignored.
bool same_structure(const Algebra& a, const Algebra& b);

/// [x, y]; throws std::invalid_argument on dimension mismatch.
Vector bracket(const Algebra& a, const Vector& x, const Vector& y);

/// ad(x) = [x, -] as a matrix acting on coordinate columns.
Matrix adjoint(const Algebra& a, const Vector& x);

/// One violated instance of a defining identity on basis elements.
struct IdentityFailure {
  std::string identity;               // "antisymmetry", "jacobi", "left-leibniz", "right-leibniz"
  std::vector<std::size_t> indices;   // 0-based basis indices (pair or triple)
  Vector lhs;
  Vector rhs;

  /// rhs - lhs
  Vector residual() const { return rhs - lhs; }
};

struct KindCheck {
  Kind kind = Kind::generic;
  std::vector<IdentityFailure> failures;  // every failing basis instance, lexicographic

  bool passed() const { return failures.empty(); }
};

/// Evaluates the identities demanded by `kind` on all basis pairs/triples.
KindCheck check_kind(const Algebra& a, Kind kind);
inline KindCheck check_kind(const Algebra& a) { return check_kind(a, a.kind); }

/// Opposite product {x, y} = [y, x]; swaps leibniz-left and leibniz-right.
Algebra opposite(const Algebra& a);

/// Built-in algebras: abelian(n) (also `abelianN`), L1, L2, L3, L4,
/// heisenberg3, sl2. Throws std::invalid_argument for unknown names.
Algebra builtin(std::string_view name);

/// Names accepted by builtin() that the CLI and test suites sweep over.
std::vector<std::string> builtin_names();

}  // namespace bider

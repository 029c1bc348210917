#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <vector>

#include "bider/bilinear.hpp"
#include "bider/matrix.hpp"

namespace bider {

/// Exponent vector of a monomial y^a = prod_i y_i^{a_i}.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<unsigned> exponents) : exps_(std::move(exponents)) {}

  static MultiIndex zero(std::size_t n) { return MultiIndex(std::vector<unsigned>(n, 0)); }
  static MultiIndex unit(std::size_t n, std::size_t i);

  std::size_t size() const { return exps_.size(); }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<unsigned>& exponents() const { return exps_; }
  unsigned degree() const;

  /// prod_i y_i^{a_i}
  Rational evaluate(const Vector& y) const;
  double evaluate(const std::vector<double>& y) const;

  friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<unsigned> exps_;
};

/// All multi-indices of length n with total degree exactly d, in increasing order.
std::vector<MultiIndex> monomials_of_degree(std::size_t n, unsigned d);

enum class Side { right, left };

/// A map linear in one argument with polynomial dependence on the other:
///   right: B(x, y) = sum_a y^a (M_a x)
///   left:  B(x, y) = sum_a x^a (M_a y)
/// Zero coefficient matrices are never stored.
template <Side S>
class PolyMap {
 public:
  using Terms = std::map<MultiIndex, Matrix>;

  PolyMap() = default;
  explicit PolyMap(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Largest total degree of a stored monomial; 0 for the zero map.
  unsigned degree() const;

  /// Accumulates m into the coefficient of `index`, dropping it if it cancels.
  void add_term(const MultiIndex& index, const Matrix& m);

  /// The coefficient of `index` (zero matrix if absent).
  Matrix coefficient(const MultiIndex& index) const;

  Vector evaluate(const Vector& x, const Vector& y) const;
  /// The linear map obtained by freezing the polynomial argument:
  /// sum_a v^a M_a, i.e. B(-, v) for right maps and B(v, -) for left maps.
  Matrix frozen(const Vector& v) const;
  std::vector<double> evaluate(const std::vector<double>& x, const std::vector<double>& y) const;

  PolyMap& operator+=(const PolyMap& o);
  PolyMap& operator-=(const PolyMap& o);
  PolyMap& operator*=(const Rational& s);

  friend PolyMap operator+(PolyMap a, const PolyMap& b) { return a += b; }
  friend PolyMap operator-(PolyMap a, const PolyMap& b) { return a -= b; }
  friend PolyMap operator*(const Rational& s, PolyMap b) { return b *= s; }
  friend bool operator==(const PolyMap&, const PolyMap&) = default;

 private:
  std::size_t dim_ = 0;
  Terms terms_;
};

using PolyRightMap = PolyMap<Side::right>;
using PolyLeftMap = PolyMap<Side::left>;

extern template class PolyMap<Side::right>;
extern template class PolyMap<Side::left>;

/// Degree-one embeddings of a bilinear tensor and their inverses. The
/// inverses throw std::domain_error if any stored monomial has degree != 1.
PolyRightMap right_from_tensor(const BilinearTensor& b);
PolyLeftMap left_from_tensor(const BilinearTensor& b);
BilinearTensor to_tensor(const PolyRightMap& p);
BilinearTensor to_tensor(const PolyLeftMap& p);

/// B^t(x, y) = B(y, x): swaps the representation side, terms unchanged.
PolyLeftMap transpose(const PolyRightMap& p);
PolyRightMap transpose(const PolyLeftMap& p);

/// Values on basis pairs: t[i][j] = B(e_i, e_j).
template <Side S>
BilinearTensor basis_values(const PolyMap<S>& p);

}  // namespace bider

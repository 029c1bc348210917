#pragma once

#include <cstddef>
#include <vector>

#include "bider/rational.hpp"

namespace bider {

/// Bilinear map B on Q^n stored as t[i][j][k] with B(e_i, e_j) = sum_k t[i][j][k] e_k.
/// The first index is always the first argument.
class BilinearTensor {
 public:
  BilinearTensor() = default;
  explicit BilinearTensor(std::size_t dim);

  /// Inverse of coords(); flat index (i*n + j)*n + k.
  static BilinearTensor from_coords(std::size_t dim, const Vector& coords);

  std::size_t dim() const { return dim_; }

  Rational& at(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * dim_ + j) * dim_ + k]; }
  const Rational& at(std::size_t i, std::size_t j, std::size_t k) const { return data_[(i * dim_ + j) * dim_ + k]; }

  /// B(e_i, e_j) as a vector.
  Vector value(std::size_t i, std::size_t j) const;
  void set_value(std::size_t i, std::size_t j, const Vector& v);

  const Vector& coords() const { return data_; }
  bool is_zero() const;
  bool is_symmetric() const;
  bool is_skew_symmetric() const;

  BilinearTensor& operator+=(const BilinearTensor& o);
  BilinearTensor& operator-=(const BilinearTensor& o);
  BilinearTensor& operator*=(const Rational& s);

  friend bool operator==(const BilinearTensor&, const BilinearTensor&) = default;

 private:
  std::size_t dim_ = 0;
  Vector data_;
};

/// sum_{i,j} x_i y_j B(e_i, e_j)
Vector evaluate(const BilinearTensor& b, const Vector& x, const Vector& y);

BilinearTensor transpose(const BilinearTensor& b);
/// B + B^t
BilinearTensor sigma(const BilinearTensor& b);
/// B - B^t
BilinearTensor alpha(const BilinearTensor& b);

BilinearTensor add(const BilinearTensor& a, const BilinearTensor& b);
BilinearTensor scale(const Rational& s, const BilinearTensor& b);

BilinearTensor operator+(BilinearTensor a, const BilinearTensor& b);
BilinearTensor operator-(BilinearTensor a, const BilinearTensor& b);
BilinearTensor operator*(const Rational& s, BilinearTensor b);

}  // namespace bider

#include "bider/bilinear.hpp"

#include <stdexcept>

namespace bider {

BilinearTensor::BilinearTensor(std::size_t dim) : dim_(dim), data_(zero_vector(dim * dim * dim)) {}

BilinearTensor BilinearTensor::from_coords(std::size_t dim, const Vector& coords) {
  if (coords.size() != dim * dim * dim) throw std::invalid_argument("tensor coordinate length must be n^3");
  BilinearTensor b(dim);
  b.data_ = coords;
  return b;
}

Vector BilinearTensor::value(std::size_t i, std::size_t j) const {
  Vector v(dim_);
  for (std::size_t k = 0; k < dim_; ++k) v[k] = at(i, j, k);
  return v;
}

void BilinearTensor::set_value(std::size_t i, std::size_t j, const Vector& v) {
  if (v.size() != dim_) throw std::invalid_argument("value length differs from dimension");
  for (std::size_t k = 0; k < dim_; ++k) at(i, j, k) = v[k];
}

bool BilinearTensor::is_zero() const {
  return bider::is_zero(data_);
}

bool BilinearTensor::is_symmetric() const {
  return *this == transpose(*this);
}

bool BilinearTensor::is_skew_symmetric() const {
  return (*this + transpose(*this)).is_zero();
}

BilinearTensor& BilinearTensor::operator+=(const BilinearTensor& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("tensor dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

BilinearTensor& BilinearTensor::operator-=(const BilinearTensor& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("tensor dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

BilinearTensor& BilinearTensor::operator*=(const Rational& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Vector evaluate(const BilinearTensor& b, const Vector& x, const Vector& y) {
  const std::size_t n = b.dim();
  if (x.size() != n || y.size() != n) throw std::invalid_argument("argument dimension mismatch");
  Vector out = zero_vector(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      const Rational w = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) {
        if (b.at(i, j, k) != 0) out[k] += w * b.at(i, j, k);
      }
    }
  }
  return out;
}

BilinearTensor transpose(const BilinearTensor& b) {
  const std::size_t n = b.dim();
  BilinearTensor t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) t.at(i, j, k) = b.at(j, i, k);
  return t;
}

BilinearTensor sigma(const BilinearTensor& b) {
  return b + transpose(b);
}

BilinearTensor alpha(const BilinearTensor& b) {
  return b - transpose(b);
}

BilinearTensor add(const BilinearTensor& a, const BilinearTensor& b) {
  return a + b;
}

BilinearTensor scale(const Rational& s, const BilinearTensor& b) {
  return s * b;
}

BilinearTensor operator+(BilinearTensor a, const BilinearTensor& b) {
  a += b;
  return a;
}

BilinearTensor operator-(BilinearTensor a, const BilinearTensor& b) {
  a -= b;
  return a;
}

BilinearTensor operator*(const Rational& s, BilinearTensor b) {
  b *= s;
  return b;
}

}  // namespace bider

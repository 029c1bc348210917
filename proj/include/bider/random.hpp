#pragma once

#include <cstdint>
#include <random>

#include "bider/bilinear.hpp"
#include "bider/linalg.hpp"
#include "bider/matrix.hpp"
#include "bider/poly.hpp"

namespace bider {

/// Seeded source of small random rationals. Draws are mapped with plain
/// modular arithmetic on mt19937_64 output, so a seed gives the same stream
/// on every platform.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  bool coin() { return integer(0, 1) == 1; }
  /// p/q with p in [-5, 5], q in [1, 4].
  Rational rational();
  Rational nonzero_rational();

  Vector vector(std::size_t n);
  Matrix matrix(std::size_t n);
  BilinearTensor tensor(std::size_t n);
  /// Random rational combination of the basis vectors.
  Vector element_of(const SubspaceBasis& space);
  /// Multi-index of total degree in [0, max_degree].
  MultiIndex multi_index(std::size_t n, unsigned max_degree);

 private:
  std::mt19937_64 rng_;
};

}  // namespace bider

#include "bider/random.hpp"

namespace bider {

std::int64_t Sampler::integer(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng_() % span);
}

Rational Sampler::rational() {
  Rational q(static_cast<long>(integer(-5, 5)), static_cast<unsigned long>(integer(1, 4)));
  q.canonicalize();
  return q;
}

Rational Sampler::nonzero_rational() {
  Rational q = 0;
  while (q == 0) q = rational();
  return q;
}

Vector Sampler::vector(std::size_t n) {
  Vector v(n);
  for (auto& x : v) x = rational();
  return v;
}

Matrix Sampler::matrix(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = rational();
  return m;
}

BilinearTensor Sampler::tensor(std::size_t n) {
  return BilinearTensor::from_coords(n, vector(n * n * n));
}

Vector Sampler::element_of(const SubspaceBasis& space) {
  return combine(space, vector(space.dim()));
}

MultiIndex Sampler::multi_index(std::size_t n, unsigned max_degree) {
  std::vector<unsigned> e(n, 0);
  const auto degree = static_cast<unsigned>(integer(0, max_degree));
  for (unsigned d = 0; d < degree; ++d) ++e[static_cast<std::size_t>(integer(0, static_cast<std::int64_t>(n) - 1))];
  return MultiIndex(std::move(e));
}

}  // namespace bider

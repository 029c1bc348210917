#include "bider/poly.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace bider {

MultiIndex MultiIndex::unit(std::size_t n, std::size_t i) {
  std::vector<unsigned> e(n, 0);
  e.at(i) = 1;
  return MultiIndex(std::move(e));
}

unsigned MultiIndex::degree() const {
  unsigned d = 0;
  for (unsigned e : exps_) d += e;
  return d;
}

Rational MultiIndex::evaluate(const Vector& y) const {
  if (y.size() != exps_.size()) throw std::invalid_argument("monomial arity mismatch");
  Rational r = 1;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    for (unsigned e = 0; e < exps_[i]; ++e) r *= y[i];
  return r;
}

double MultiIndex::evaluate(const std::vector<double>& y) const {
  if (y.size() != exps_.size()) throw std::invalid_argument("monomial arity mismatch");
  double r = 1.0;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    for (unsigned e = 0; e < exps_[i]; ++e) r *= y[i];
  return r;
}

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
  if (a.size() != b.size()) throw std::invalid_argument("multi-index arity mismatch");
  std::vector<unsigned> e(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) e[i] = a[i] + b[i];
  return MultiIndex(std::move(e));
}

std::vector<MultiIndex> monomials_of_degree(std::size_t n, unsigned d) {
  std::vector<MultiIndex> out;
  std::vector<unsigned> e(n, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t pos, unsigned left) {
    if (pos + 1 == n) {
      e[pos] = left;
      out.emplace_back(e);
      return;
    }
    for (unsigned v = 0; v <= left; ++v) {
      e[pos] = v;
      rec(pos + 1, left - v);
    }
  };
  if (n == 0) return out;
  rec(0, d);
  std::sort(out.begin(), out.end());
  return out;
}

template <Side S>
unsigned PolyMap<S>::degree() const {
  unsigned d = 0;
  for (const auto& [index, m] : terms_) d = std::max(d, index.degree());
  return d;
}

template <Side S>
void PolyMap<S>::add_term(const MultiIndex& index, const Matrix& m) {
  if (index.size() != dim_ || m.rows() != dim_ || m.cols() != dim_) {
    throw std::invalid_argument("term does not match map dimension");
  }
  if (m.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(index, m);
  if (!inserted) {
    it->second += m;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

template <Side S>
Matrix PolyMap<S>::coefficient(const MultiIndex& index) const {
  const auto it = terms_.find(index);
  return it == terms_.end() ? Matrix::zero(dim_, dim_) : it->second;
}

template <Side S>
Vector PolyMap<S>::evaluate(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw std::invalid_argument("argument dimension mismatch");
  const Vector& frozen = S == Side::right ? y : x;
  const Vector& linear = S == Side::right ? x : y;
  Vector out = zero_vector(dim_);
  for (const auto& [index, m] : terms_) {
    const Rational w = index.evaluate(frozen);
    if (w == 0) continue;
    out = out + w * m.apply(linear);
  }
  return out;
}

template <Side S>
Matrix PolyMap<S>::frozen(const Vector& v) const {
  if (v.size() != dim_) throw std::invalid_argument("argument dimension mismatch");
  Matrix out = Matrix::zero(dim_, dim_);
  for (const auto& [index, m] : terms_) {
    const Rational w = index.evaluate(v);
    if (w != 0) out += w * m;
  }
  return out;
}

template <Side S>
std::vector<double> PolyMap<S>::evaluate(const std::vector<double>& x, const std::vector<double>& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw std::invalid_argument("argument dimension mismatch");
  const auto& frozen = S == Side::right ? y : x;
  const auto& linear = S == Side::right ? x : y;
  std::vector<double> out(dim_, 0.0);
  for (const auto& [index, m] : terms_) {
    const double w = index.evaluate(frozen);
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c) out[r] += w * m(r, c).get_d() * linear[c];
  }
  return out;
}

template <Side S>
PolyMap<S>& PolyMap<S>::operator+=(const PolyMap& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("map dimension mismatch");
  for (const auto& [index, m] : o.terms_) add_term(index, m);
  return *this;
}

template <Side S>
PolyMap<S>& PolyMap<S>::operator-=(const PolyMap& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("map dimension mismatch");
  for (const auto& [index, m] : o.terms_) add_term(index, Rational(-1) * m);
  return *this;
}

template <Side S>
PolyMap<S>& PolyMap<S>::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [index, m] : terms_) m *= s;
  return *this;
}

template class PolyMap<Side::right>;
template class PolyMap<Side::left>;

PolyRightMap right_from_tensor(const BilinearTensor& b) {
  const std::size_t n = b.dim();
  PolyRightMap p(n);
  for (std::size_t j = 0; j < n; ++j) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) m(k, i) = b.at(i, j, k);
    p.add_term(MultiIndex::unit(n, j), m);
  }
  return p;
}

PolyLeftMap left_from_tensor(const BilinearTensor& b) {
  const std::size_t n = b.dim();
  PolyLeftMap p(n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) m(k, j) = b.at(i, j, k);
    p.add_term(MultiIndex::unit(n, i), m);
  }
  return p;
}

namespace {

template <Side S>
BilinearTensor to_tensor_impl(const PolyMap<S>& p) {
  const std::size_t n = p.dim();
  BilinearTensor b(n);
  for (const auto& [index, m] : p.terms()) {
    if (index.degree() != 1) throw std::domain_error("map has a term of degree != 1; it is not bilinear");
    std::size_t frozen = 0;
    while (index[frozen] == 0) ++frozen;
    for (std::size_t linear = 0; linear < n; ++linear)
      for (std::size_t k = 0; k < n; ++k) {
        if (S == Side::right) b.at(linear, frozen, k) = m(k, linear);
        else b.at(frozen, linear, k) = m(k, linear);
      }
  }
  return b;
}

template <Side To, Side From>
PolyMap<To> swap_side(const PolyMap<From>& p) {
  PolyMap<To> out(p.dim());
  for (const auto& [index, m] : p.terms()) out.add_term(index, m);
  return out;
}

}  // namespace

BilinearTensor to_tensor(const PolyRightMap& p) { return to_tensor_impl(p); }
BilinearTensor to_tensor(const PolyLeftMap& p) { return to_tensor_impl(p); }

PolyLeftMap transpose(const PolyRightMap& p) { return swap_side<Side::left>(p); }
PolyRightMap transpose(const PolyLeftMap& p) { return swap_side<Side::right>(p); }

template <Side S>
BilinearTensor basis_values(const PolyMap<S>& p) {
  const std::size_t n = p.dim();
  BilinearTensor b(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b.set_value(i, j, p.evaluate(unit_vector(n, i), unit_vector(n, j)));
  return b;
}

template BilinearTensor basis_values(const PolyRightMap&);
template BilinearTensor basis_values(const PolyLeftMap&);

}  // namespace bider

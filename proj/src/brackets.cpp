#include "bider/brackets.hpp"

#include <sstream>
#include <stdexcept>

#include "bider/biderivations.hpp"
#include "bider/derivations.hpp"
#include "bider/random.hpp"

namespace bider {

namespace {

template <Side S>
PolyMap<S> frozen_commutator(const PolyMap<S>& b1, const PolyMap<S>& b2) {
  if (b1.dim() != b2.dim()) throw std::invalid_argument("bracket operands have different dimensions");
  PolyMap<S> out(b1.dim());
  for (const auto& [a, m] : b1.terms())
    for (const auto& [b, n] : b2.terms()) out.add_term(a + b, commutator(m, n));
  return out;
}

template <Side S>
bool coefficients_are_derivations(const Algebra& a, const PolyMap<S>& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("map and algebra dimensions differ");
  for (const auto& [index, m] : b.terms()) {
    if (!is_derivation(a, m)) return false;
  }
  return true;
}

template <Side S>
PolyMap<S> random_bider(const Algebra& a, Sampler& sampler, const SubspaceBasis& bilinear,
                        const std::vector<Matrix>& ders) {
  const std::size_t n = a.dim();
  const BilinearTensor t = BilinearTensor::from_coords(n, sampler.element_of(bilinear));
  PolyMap<S> p(n);
  if constexpr (S == Side::right) p = right_from_tensor(t);
  else p = left_from_tensor(t);
  if (!ders.empty()) {
    const auto extra = sampler.integer(0, 2);
    for (std::int64_t e = 0; e < extra; ++e) {
      Matrix d = Matrix::zero(n, n);
      for (const Matrix& basis : ders) d += sampler.rational() * basis;
      p.add_term(sampler.multi_index(n, 2), d);
    }
  }
  return p;
}

template <Side S>
PolyMap<S> side_bracket(const PolyMap<S>& b1, const PolyMap<S>& b2) {
  if constexpr (S == Side::right) return rhd(b1, b2);
  else return lhd(b1, b2);
}

template <Side S>
bool side_is_bider(const Algebra& a, const PolyMap<S>& b) {
  if constexpr (S == Side::right) return is_right_bider_poly(a, b);
  else return is_left_bider_poly(a, b);
}

template <Side S>
LieAlgebraCheck run_lie_check(const Algebra& a, std::size_t samples, std::uint64_t seed) {
  Sampler sampler(seed);
  const SubspaceBasis bilinear =
      S == Side::right ? right_bider_bilinear_space(a) : left_bider_bilinear_space(a);
  const std::vector<Matrix> ders = derivation_basis(a);
  LieAlgebraCheck report;
  report.side = S;
  report.samples = samples;
  const auto note = [&](std::size_t index, const char* what) {
    if (!report.witness) {
      std::ostringstream os;
      os << what << " violated at sample " << index;
      report.witness = os.str();
    }
  };

  for (std::size_t s = 0; s < samples; ++s) {
    const auto b1 = random_bider<S>(a, sampler, bilinear, ders);
    const auto b2 = random_bider<S>(a, sampler, bilinear, ders);
    const auto b3 = random_bider<S>(a, sampler, bilinear, ders);
    const Rational u = sampler.rational();
    const Rational v = sampler.rational();

    const auto b12 = side_bracket(b1, b2);
    const auto b23 = side_bracket(b2, b3);
    const auto b31 = side_bracket(b3, b1);

    if (!side_is_bider(a, b1) || !side_is_bider(a, b12) || !side_is_bider(a, b23) || !side_is_bider(a, b31)) {
      ++report.closure_failures;
      note(s, "closure");
    }

    const auto left_lin = side_bracket(u * b1 + v * b2, b3);
    const auto right_lin = side_bracket(b1, u * b2 + v * b3);
    if (left_lin != u * side_bracket(b1, b3) + v * b23 || right_lin != u * b12 + v * side_bracket(b1, b3)) {
      ++report.bilinearity_failures;
      note(s, "bilinearity");
    }

    if (!side_bracket(b1, b1).is_zero() || !side_bracket(b12, b12).is_zero()) {
      ++report.alternativity_failures;
      note(s, "alternativity");
    }

    const auto jacobi = side_bracket(b1, b23) + side_bracket(b2, b31) + side_bracket(b3, b12);
    if (!jacobi.is_zero()) {
      ++report.jacobi_failures;
      note(s, "jacobi");
    }
  }
  return report;
}

template <Side S>
bool equal_on_basis_pairs_swapped(const PolyRightMap& r, const PolyMap<S>& l) {
  const std::size_t n = r.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector x = unit_vector(n, i);
      const Vector y = unit_vector(n, j);
      if (r.evaluate(x, y) != l.evaluate(y, x)) return false;
    }
  return true;
}

}  // namespace

PolyRightMap rhd(const PolyRightMap& b1, const PolyRightMap& b2) {
  return frozen_commutator(b1, b2);
}

PolyLeftMap lhd(const PolyLeftMap& b1, const PolyLeftMap& b2) {
  return frozen_commutator(b1, b2);
}

bool is_right_bider_poly(const Algebra& a, const PolyRightMap& b) {
  return coefficients_are_derivations(a, b);
}

bool is_left_bider_poly(const Algebra& a, const PolyLeftMap& b) {
  return coefficients_are_derivations(a, b);
}

PolyRightMap random_right_bider(const Algebra& a, Sampler& sampler) {
  return random_bider<Side::right>(a, sampler, right_bider_bilinear_space(a), derivation_basis(a));
}

PolyLeftMap random_left_bider(const Algebra& a, Sampler& sampler) {
  return random_bider<Side::left>(a, sampler, left_bider_bilinear_space(a), derivation_basis(a));
}

LieAlgebraCheck verify_lie_algebra(const Algebra& a, Side side, std::size_t samples, std::uint64_t seed) {
  return side == Side::right ? run_lie_check<Side::right>(a, samples, seed)
                             : run_lie_check<Side::left>(a, samples, seed);
}

TransposeCheck verify_transpose_identities(const Algebra& a) {
  const std::size_t n = a.dim();
  const std::vector<BilinearTensor> basis = tensors_of(n, right_bider_bilinear_space(a));
  TransposeCheck report;
  const auto note = [&](const char* what, std::size_t p, std::size_t q) {
    if (!report.witness) {
      std::ostringstream os;
      os << what << " fails for basis pair (" << p + 1 << ", " << q + 1 << ")";
      report.witness = os.str();
    }
  };

  std::vector<BilinearTensor> sym, skew;
  for (const auto& b : basis) {
    sym.push_back(sigma(b));
    skew.push_back(alpha(b));
  }

  for (std::size_t p = 0; p < basis.size(); ++p)
    for (std::size_t q = 0; q < basis.size(); ++q) {
      ++report.pairs;
      const auto& b1 = basis[p];
      const auto& b2 = basis[q];
      const PolyRightMap lhs = rhd(right_from_tensor(b1), right_from_tensor(b2));
      const PolyRightMap rhs = transpose(lhd(left_from_tensor(transpose(b1)), left_from_tensor(transpose(b2))));
      if (lhs != rhs) {
        ++report.transpose_failures;
        note("transpose identity", p, q);
      }

      // Same symmetry type: S1 |> S2 (x,y) = S1 <| S2 (y,x).
      for (const auto* family : {&sym, &skew}) {
        const auto& s1 = (*family)[p];
        const auto& s2 = (*family)[q];
        const PolyRightMap r = rhd(right_from_tensor(s1), right_from_tensor(s2));
        const PolyLeftMap l = lhd(left_from_tensor(s1), left_from_tensor(s2));
        if (r != transpose(l) || !equal_on_basis_pairs_swapped(r, l)) {
          ++report.same_symmetry_failures;
          note(family == &sym ? "sym/sym identity" : "skew/skew identity", p, q);
        }
      }

      // Mixed symmetry: S1 |> S2 (x,y) = S2 <| S1 (y,x).
      const std::pair<const BilinearTensor*, const BilinearTensor*> mixed[] = {{&sym[p], &skew[q]},
                                                                                {&skew[p], &sym[q]}};
      for (const auto& [s1, s2] : mixed) {
        const PolyRightMap r = rhd(right_from_tensor(*s1), right_from_tensor(*s2));
        const PolyLeftMap l = lhd(left_from_tensor(*s2), left_from_tensor(*s1));
        if (r != transpose(l) || !equal_on_basis_pairs_swapped(r, l)) {
          ++report.mixed_symmetry_failures;
          note("mixed symmetry identity", p, q);
        }
      }
    }
  return report;
}

}  // namespace bider

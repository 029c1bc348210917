#include "bider/suites.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "bider/biderivations.hpp"
#include "bider/brackets.hpp"
#include "bider/derivations.hpp"
#include "bider/io.hpp"
#include "bider/random.hpp"
#include "bider/scalar_class.hpp"

namespace bider {

namespace {

std::string triple_label(std::size_t i, std::size_t j, std::size_t k) {
  return "(e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + ",e" + std::to_string(k + 1) + ")";
}

std::string describe(const IdentityFailure& f) {
  std::string where = "(";
  for (std::size_t p = 0; p < f.indices.size(); ++p) where += (p ? ",e" : "e") + std::to_string(f.indices[p] + 1);
  where += ")";
  return f.identity + " at " + where + ": lhs = " + format_element(f.lhs) + ", rhs = " + format_element(f.rhs) +
         ", residual = " + format_element(f.residual());
}

std::string describe(const TripleWitness& w) {
  return triple_label(w.i, w.j, w.k) + ": lhs = " + format_element(w.lhs) + ", rhs = " + format_element(w.rhs) +
         ", residual = " + format_element(w.residual());
}

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

// ---- derivations ---------------------------------------------------------

void derivation_suite(const Algebra& a, Report& r) {
  const std::vector<Matrix> ders = derivation_basis(a);
  const SubspaceBasis space = derivation_space(a);
  r.details.push_back("dim Der = " + std::to_string(ders.size()));

  const bool all_der = std::all_of(ders.begin(), ders.end(), [&](const Matrix& d) { return is_derivation(a, d); });
  r.add("derivations", "basis satisfies the Leibniz rule", all_der);

  bool closed = true;
  std::string witness;
  for (std::size_t p = 0; p < ders.size() && closed; ++p)
    for (std::size_t q = p + 1; q < ders.size() && closed; ++q) {
      if (!contains(space, matrix_to_coords(commutator(ders[p], ders[q])))) {
        closed = false;
        witness = "[D" + std::to_string(p + 1) + ",D" + std::to_string(q + 1) + "] leaves Der";
      }
    }
  r.add("derivations", "commutator closes in Der", closed, witness);

  bool jacobi = true;
  for (std::size_t p = 0; p < ders.size() && jacobi; ++p)
    for (std::size_t q = 0; q < ders.size() && jacobi; ++q)
      for (std::size_t s = 0; s < ders.size() && jacobi; ++s) {
        const Matrix sum = commutator(ders[p], commutator(ders[q], ders[s])) +
                           commutator(ders[q], commutator(ders[s], ders[p])) +
                           commutator(ders[s], commutator(ders[p], ders[q]));
        if (!sum.is_zero()) {
          jacobi = false;
          witness = "basis triple (" + std::to_string(p + 1) + "," + std::to_string(q + 1) + "," +
                    std::to_string(s + 1) + ")";
        }
      }
  r.add("derivations", "commutator Jacobi identity", jacobi, witness);
}

// ---- biderivation spaces -------------------------------------------------

SubspaceBasis symmetric_tensors(std::size_t n, bool skew) {
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (skew && i == j) continue;
        BilinearTensor b(n);
        b.at(i, j, k) += 1;
        b.at(j, i, k) += skew ? -1 : 1;
        vs.push_back(b.coords());
      }
  return canonicalize(n * n * n, vs);
}

void biderivation_suite(const Algebra& a, const VerifyOptions& opt, Report& r) {
  const std::size_t n = a.dim();
  Sampler sampler(opt.seed + 101);
  const SubspaceBasis right = right_bider_bilinear_space(a);
  const SubspaceBasis left = left_bider_bilinear_space(a);
  const SubspaceBasis both = bider_space(a);
  const std::size_t dim_der = derivation_space(a).dim();
  r.details.push_back("dim BiDer_r (bilinear) = " + std::to_string(right.dim()) +
                      ", dim BiDer_l (bilinear) = " + std::to_string(left.dim()) +
                      ", dim BiDer = " + std::to_string(both.dim()));

  bool closure = true;
  for (std::size_t s = 0; s < opt.samples; ++s) {
    const BilinearTensor b = BilinearTensor::from_coords(n, sampler.element_of(right));
    if (!is_right_bider(a, b)) closure = false;
  }
  r.add("biderivations", "right biderivations form a vector space", closure);

  const SubspaceBasis right_struct = right_bider_space_from_derivations(a);
  const bool right_ok = right.dim() == n * dim_der && right == right_struct && is_subspace(right, right_struct) &&
                        is_subspace(right_struct, right);
  r.add("biderivations", "right space = maps y -> Der (dim n*dim Der)", right_ok,
        "dim " + std::to_string(right.dim()) + " vs " + std::to_string(n * dim_der));
  const SubspaceBasis left_struct = left_bider_space_from_derivations(a);
  const bool left_ok = left.dim() == n * dim_der && left == left_struct && is_subspace(left, left_struct) &&
                       is_subspace(left_struct, left);
  r.add("biderivations", "left space = maps x -> Der (dim n*dim Der)", left_ok,
        "dim " + std::to_string(left.dim()) + " vs " + std::to_string(n * dim_der));

  r.add("biderivations", "BiDer = BiDer_r intersect BiDer_l", intersect(right, left) == both);

  bool sym_left = true;
  for (bool skew : {false, true}) {
    const SubspaceBasis sub = intersect(right, symmetric_tensors(n, skew));
    for (const auto& b : tensors_of(n, sub)) sym_left = sym_left && is_left_bider(a, b);
    for (std::size_t s = 0; s < opt.samples && sub.dim() > 0; ++s)
      sym_left = sym_left && is_left_bider(a, BilinearTensor::from_coords(n, sampler.element_of(sub)));
  }
  r.add("biderivations", "symmetric or skew right biderivations are left", sym_left);

  bool sa = true;
  std::vector<BilinearTensor> members = tensors_of(n, both);
  for (std::size_t s = 0; s < opt.samples && both.dim() > 0; ++s)
    members.push_back(BilinearTensor::from_coords(n, sampler.element_of(both)));
  for (const auto& b : members) {
    const BilinearTensor s_b = sigma(b);
    const BilinearTensor a_b = alpha(b);
    sa = sa && is_bider(a, s_b) && is_bider(a, a_b) && s_b.is_symmetric() && a_b.is_skew_symmetric();
  }
  r.add("biderivations", "sigma(B), alpha(B) are symmetric/skew biderivations", sa);
}

// ---- bracket Lie algebras ------------------------------------------------

std::string lie_witness(const LieAlgebraCheck& c) {
  return c.witness.value_or("");
}

void bracket_suite(const Algebra& a, const VerifyOptions& opt, Report& r) {
  const std::size_t n = a.dim();
  for (Side side : {Side::right, Side::left}) {
    const LieAlgebraCheck c = verify_lie_algebra(a, side, opt.samples, opt.seed);
    const std::string op = side == Side::right ? "rhd" : "lhd";
    r.add("brackets", op + " closure", c.closure_failures == 0, lie_witness(c));
    r.add("brackets", op + " bilinearity", c.bilinearity_failures == 0, lie_witness(c));
    r.add("brackets", op + " alternativity", c.alternativity_failures == 0, lie_witness(c));
    r.add("brackets", op + " Jacobi identity", c.jacobi_failures == 0, lie_witness(c));
  }

  Sampler sampler(opt.seed + 202);
  bool pointwise_r = true, pointwise_l = true;
  for (std::size_t s = 0; s < opt.samples; ++s) {
    const PolyRightMap b1 = random_right_bider(a, sampler);
    const PolyRightMap b2 = random_right_bider(a, sampler);
    const PolyLeftMap c1 = random_left_bider(a, sampler);
    const PolyLeftMap c2 = random_left_bider(a, sampler);
    const PolyRightMap rb = rhd(b1, b2);
    const PolyLeftMap lb = lhd(c1, c2);
    for (int point = 0; point < 2; ++point) {
      const Vector x = sampler.vector(n);
      const Vector y = sampler.vector(n);
      pointwise_r = pointwise_r && rb.evaluate(x, y) == b1.evaluate(b2.evaluate(x, y), y) - b2.evaluate(b1.evaluate(x, y), y);
      pointwise_l = pointwise_l && lb.evaluate(x, y) == c1.evaluate(x, c2.evaluate(x, y)) - c2.evaluate(x, c1.evaluate(x, y));
    }
  }
  r.add("brackets", "rhd closed form = B1(B2(x,y),y) - B2(B1(x,y),y)", pointwise_r);
  r.add("brackets", "lhd closed form = B1(x,B2(x,y)) - B2(x,B1(x,y))", pointwise_l);

  // Coefficient-wise criterion against sampled slices x -> B(x, y).
  bool criterion = true;
  std::string witness;
  for (std::size_t s = 0; s < opt.samples; ++s) {
    PolyRightMap b = random_right_bider(a, sampler);
    if (s % 2 == 1) b.add_term(sampler.multi_index(n, 2), sampler.matrix(n));
    const bool claimed = is_right_bider_poly(a, b);
    bool sampled = true;
    for (int k = 0; k < 50; ++k) sampled = sampled && is_derivation(a, b.frozen(sampler.vector(n)));
    if (claimed != sampled) {
      criterion = false;
      witness = "sample " + std::to_string(s);
    }
  }
  r.add("brackets", "coefficient criterion = sampled derivation slices", criterion, witness);

  // Fixed y: (B1 |> B2)(-, y) = [B1(-, y), B2(-, y)] for bilinear right biderivations.
  const SubspaceBasis right = right_bider_bilinear_space(a);
  bool fixed_y = true;
  for (std::size_t s = 0; s < opt.samples; ++s) {
    const BilinearTensor t1 = BilinearTensor::from_coords(n, sampler.element_of(right));
    const BilinearTensor t2 = BilinearTensor::from_coords(n, sampler.element_of(right));
    const PolyRightMap br = rhd(right_from_tensor(t1), right_from_tensor(t2));
    std::vector<Vector> ys;
    for (std::size_t j = 0; j < n; ++j) ys.push_back(unit_vector(n, j));
    ys.push_back(sampler.vector(n));
    for (const auto& y : ys) {
      const Matrix d = commutator(right_slice(t1, y), right_slice(t2, y));
      fixed_y = fixed_y && br.frozen(y) == d && is_derivation(a, d);
    }
  }
  r.add("brackets", "fixed-y rhd = commutator of derivations B(-,y)", fixed_y);
}

// ---- transpose / symmetry identities --------------------------------------

void transpose_suite(const Algebra& a, const VerifyOptions& opt, Report& r) {
  const std::size_t n = a.dim();
  const TransposeCheck t = verify_transpose_identities(a);
  const std::string w = t.witness.value_or("");
  r.details.push_back("transpose identities checked on " + std::to_string(t.pairs) + " basis pairs");
  r.add("transpose", "B1 rhd B2 = (B1^t lhd B2^t)^t", t.transpose_failures == 0, w);
  r.add("transpose", "sym/sym, skew/skew: B1 rhd B2 (x,y) = B1 lhd B2 (y,x)", t.same_symmetry_failures == 0, w);
  r.add("transpose", "mixed: B1 rhd B2 (x,y) = B2 lhd B1 (y,x)", t.mixed_symmetry_failures == 0, w);

  Sampler sampler(opt.seed + 303);
  const std::size_t count = std::max<std::size_t>(100, 4 * opt.samples);
  bool diff = true, decomp = true, linear = true;
  for (std::size_t s = 0; s < count; ++s) {
    const BilinearTensor b = sampler.tensor(n);
    diff = diff && sigma(b) - alpha(b) == Rational(2) * transpose(b);
    decomp = decomp && Rational(1, 2) * (sigma(b) + alpha(b)) == b;
    const BilinearTensor c = sampler.tensor(n);
    const Rational u = sampler.rational(), v = sampler.rational();
    linear = linear && sigma(u * b + v * c) == u * sigma(b) + v * sigma(c) &&
             alpha(u * b + v * c) == u * alpha(b) + v * alpha(c);
  }
  r.add("transpose", "sigma(B) - alpha(B) = 2 B^t", diff);
  r.add("transpose", "B = (sigma(B) + alpha(B)) / 2", decomp);
  r.add("transpose", "sigma and alpha are linear", linear);
}

// ---- scalar-times-derivation class ---------------------------------------

ScalarPoly random_scalar_poly(std::size_t n, Sampler& sampler) {
  ScalarPoly g(n);
  while (g.is_zero()) {
    const auto terms = sampler.integer(1, 3);
    for (std::int64_t t = 0; t < terms; ++t) g.add_term(sampler.multi_index(n, 2), sampler.nonzero_rational());
  }
  return g;
}

Matrix random_derivation(const std::vector<Matrix>& ders, std::size_t n, Sampler& sampler) {
  Matrix d = Matrix::zero(n, n);
  for (const auto& basis : ders) d += sampler.rational() * basis;
  return d;
}

void scalar_class_suite(const Algebra& a, const VerifyOptions& opt, Report& r) {
  const std::size_t n = a.dim();
  const std::vector<Matrix> ders = derivation_basis(a);
  Sampler sampler(opt.seed + 404);

  const std::size_t sweep = std::max<std::size_t>(100, 4 * opt.samples);
  std::size_t exceptions = 0, with_der = 0;
  for (std::size_t s = 0; s < sweep; ++s) {
    const ScalarPoly g = random_scalar_poly(n, sampler);
    const Matrix f = s % 2 == 0 ? random_derivation(ders, n, sampler) : sampler.matrix(n);
    const IffDerivationResult res = iff_derivation_check(a, {g, f});
    if (!res.agrees()) ++exceptions;
    if (res.f_is_derivation) ++with_der;
  }
  r.details.push_back("g(y)F(x) sweep: " + std::to_string(sweep) + " pairs, " + std::to_string(with_der) +
                      " with F a derivation");
  r.add("scalar-class", "g(y)F(x) is a right biderivation iff F is a derivation", exceptions == 0,
        std::to_string(exceptions) + " disagreements");

  bool recon = true;
  for (std::size_t s = 0; s < opt.samples; ++s) {
    const PolyRightMap b = random_right_bider(a, sampler);
    const auto maps = decompose_by_basis(b);
    recon = recon && reconstruct_from_basis_maps(maps) == b;
    const Vector x = sampler.vector(n), y = sampler.vector(n);
    Vector sum = zero_vector(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) sum[k] += x[i] * maps[i][k].evaluate(y);
    recon = recon && sum == b.evaluate(x, y);

    const ScalarTimesDerivation st{random_scalar_poly(n, sampler), random_derivation(ders, n, sampler)};
    const auto fs = decompose_by_basis(to_poly_right(st));
    for (std::size_t i = 0; i < n; ++i) {
      const Vector fe = st.f.col(i);
      for (std::size_t k = 0; k < n; ++k) recon = recon && fs[i][k] == st.g * ScalarPoly::constant(n, fe[k]);
    }
  }
  r.add("scalar-class", "f_i(y) = B(e_i,y) reconstruct B; f_i = g(y)F(e_i)", recon);

  bool cb = true;
  for (std::size_t s = 0; s < opt.samples; ++s) {
    const ScalarTimesDerivation s1{random_scalar_poly(n, sampler), random_derivation(ders, n, sampler)};
    const ScalarTimesDerivation s2{random_scalar_poly(n, sampler), random_derivation(ders, n, sampler)};
    const ScalarTimesDerivation br = class_bracket(s1, s2);
    cb = cb && to_poly_right(br) == rhd(to_poly_right(s1), to_poly_right(s2)) && is_derivation(a, br.f);
    const Vector x = sampler.vector(n), y = sampler.vector(n);
    cb = cb && to_poly_right(br).evaluate(x, y) ==
                   (s1.g.evaluate(y) * s2.g.evaluate(y)) * commutator(s1.f, s2.f).apply(x);
  }
  r.add("scalar-class", "class bracket (g1 g2, [F1,F2]) = rhd", cb);

  std::vector<Matrix> nilpotent;
  for (const auto& d : ders)
    if (exact_exp_nilpotent(d, 1)) nilpotent.push_back(d);
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix ad = adjoint(a, unit_vector(n, i));
    if (is_derivation(a, ad) && !ad.is_zero() && exact_exp_nilpotent(ad, 1)) nilpotent.push_back(ad);
  }
  if (nilpotent.empty()) {
    r.skip("scalar-class", "exp(sF) is an automorphism (nilpotent F, exact)", "no nonzero nilpotent derivation in the basis");
  } else {
    bool aut = true;
    for (const auto& d : nilpotent)
      for (const Rational& s : {Rational(1), Rational(-1, 2), Rational(3)}) aut = aut && is_automorphism(a, *exact_exp_nilpotent(d, s));
    r.add("scalar-class", "exp(sF) is an automorphism (nilpotent F, exact)", aut);
  }

  if (a.kind != Kind::lie) {
    r.skip("scalar-class", "d/ds g(y) exp(sF) x = g(y) F x (central differences)", "algebra is not declared Lie");
  } else {
    Matrix f = Matrix::zero(n, n);
    for (std::size_t k = 0; k < ders.size(); ++k) f += Rational(static_cast<long>(k + 1)) * ders[k];
    const ScalarTimesDerivation st{random_scalar_poly(n, sampler), f};
    const Vector x = sampler.vector(n), y = sampler.vector(n);
    const ExpCurveReport e = exp_curve_check(a, st, x, y);
    std::string w;
    for (const auto& step : e.steps) {
      w += (w.empty() ? "" : "; ") + std::string("h=") + fmt_double(step.h) + " err=" + fmt_double(step.error);
      if (step.ratio) w += " ratio=" + fmt_double(*step.ratio);
    }
    r.details.push_back("exp curve: " + w + (e.truncation_free ? " (truncation-free)" : ""));
    r.add("scalar-class", "d/ds g(y) exp(sF) x = g(y) F x (central differences)", e.passed(), w);
  }
}

}  // namespace

Report run_check(const Algebra& a) {
  Report r{"check", a.name + " (kind " + std::string(to_string(a.kind)) + ")", {}, {}};
  const KindCheck k = check_kind(a);
  for (const auto& f : k.failures) r.details.push_back(describe(f));
  r.add("kind", std::string(to_string(a.kind)) + " identities on basis elements", k.passed(),
        k.passed() ? std::nullopt : std::optional<std::string>(std::to_string(k.failures.size()) + " failing instance(s)"));
  return r;
}

Report run_verify(const Algebra& a, const VerifyOptions& opt) {
  Report r{"verify", a.name + " (kind " + std::string(to_string(a.kind)) + ", seed " + std::to_string(opt.seed) +
                         ", samples " + std::to_string(opt.samples) + ")",
           {}, {}};
  const KindCheck k = check_kind(a);
  r.add("kind", std::string(to_string(a.kind)) + " identities on basis elements", k.passed(),
        k.passed() ? std::nullopt : std::optional<std::string>(describe(k.failures.front())));
  derivation_suite(a, r);
  biderivation_suite(a, opt, r);
  bracket_suite(a, opt, r);
  transpose_suite(a, opt, r);
  scalar_class_suite(a, opt, r);
  return r;
}

BilinearTensor heisenberg_b1() {
  BilinearTensor b(3);
  const auto e = [](std::size_t i) { return unit_vector(3, i - 1); };
  b.set_value(0, 0, e(3));
  b.set_value(1, 1, Rational(-1) * e(3));
  b.set_value(0, 1, e(1));
  b.set_value(1, 0, e(1));
  b.set_value(1, 2, e(3));
  b.set_value(2, 1, e(3));
  return b;
}

BilinearTensor heisenberg_b2() {
  BilinearTensor b(3);
  const auto e = [](std::size_t i) { return unit_vector(3, i - 1); };
  b.set_value(0, 0, e(1));
  b.set_value(1, 1, e(2));
  b.set_value(0, 2, e(3));
  b.set_value(2, 0, e(3));
  b.set_value(1, 2, e(3));
  b.set_value(2, 1, e(3));
  return b;
}

namespace {

void describe_tensor(const std::string& name, const BilinearTensor& b, std::vector<std::string>& out) {
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) {
      const Vector v = b.value(i, j);
      if (!is_zero(v))
        out.push_back(name + "(e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + ") = " + format_element(v));
    }
}

}  // namespace

Report run_heisenberg_example() {
  const Algebra h = builtin("heisenberg3");
  const BilinearTensor b1 = heisenberg_b1();
  const BilinearTensor b2 = heisenberg_b2();
  Report r{"example", "heisenberg", {}, {}};
  r.details.push_back("algebra heisenberg3: [e1,e2] = e3");
  describe_tensor("B1", b1, r.details);
  describe_tensor("B2", b2, r.details);

  r.add("example", "B1 is a biderivation", is_bider(h, b1));
  r.add("example", "B2 is a biderivation", is_bider(h, b2));
  r.add("example", "B1 and B2 are symmetric", b1.is_symmetric() && b2.is_symmetric());

  const PolyRightMap bracket = rhd(right_from_tensor(b1), right_from_tensor(b2));
  const BilinearTensor values = basis_values(bracket);
  r.details.push_back("B = B1 |> B2 on basis pairs (zero values omitted):");
  describe_tensor("B", values, r.details);
  r.details.push_back("B1 |> B2 in full (linear in x, quadratic in y):");
  std::istringstream full(serialize_map(bracket));
  for (std::string line; std::getline(full, line);) r.details.push_back("  " + line);

  BilinearTensor expected(3);
  expected.set_value(1, 0, Rational(-1) * unit_vector(3, 0));
  r.add("example", "B1 |> B2 basis values: only B(e2,e1) = -e1", values == expected);
  r.add("example", "B1 |> B2 is a right biderivation (all coefficients)", is_right_bider_poly(h, bracket));
  r.add("example", "B is a right biderivation", is_right_bider(h, values));

  const auto witnesses = left_bider_witnesses(h, values);
  const auto named_triple = std::find_if(witnesses.begin(), witnesses.end(),
                                         [](const TripleWitness& w) { return w.i == 1 && w.j == 1 && w.k == 0; });
  for (const auto& w : witnesses) r.details.push_back("B left condition fails at " + describe(w));
  r.add("example", "B is not a left biderivation", !witnesses.empty() && named_triple != witnesses.end(),
        "no failing triple found");
  r.add("example", "B is not symmetric", !values.is_symmetric());
  return r;
}

}  // namespace bider

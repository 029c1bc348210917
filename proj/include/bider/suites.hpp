#pragma once

#include <cstddef>
#include <cstdint>

#include "bider/algebra.hpp"
#include "bider/bilinear.hpp"
#include "bider/report.hpp"

namespace bider {

struct VerifyOptions {
  std::uint64_t seed = 0;
  std::size_t samples = 25;
};

/// Declared-kind identities; one record, every failing basis instance listed
/// in the details.
Report run_check(const Algebra& a);

/// Every identity suite on one algebra: derivation algebra, biderivation
/// spaces, the two bracket Lie algebras, the transpose/symmetry identities and
/// the scalar-times-derivation class.
Report run_verify(const Algebra& a, const VerifyOptions& options = {});

/// The symmetric biderivations B1, B2 of the Heisenberg algebra used in the
/// worked example.
BilinearTensor heisenberg_b1();
BilinearTensor heisenberg_b2();

/// Reproduces the worked Heisenberg example end to end.
Report run_heisenberg_example();

}  // namespace bider

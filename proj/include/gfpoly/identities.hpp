#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gfpoly/gfp.hpp"
#include "gfpoly/poly.hpp"
#include "gfpoly/report.hpp"

namespace gfpoly {

/// I(n) = g if n is even, 1 if n is odd.
Poly parity_weight(const GfpSpec& spec, std::size_t n);

/// F_n' equals the sum of row n-1 of the initial Fibonacci triangle, for
/// 2 <= n <= max_n.
VerificationReport verify_derivative_identity(std::size_t max_n);

/// Integral forms over the Fibonacci triangle for 2 <= n <= max_n.
///
/// Part 1: F_n = integral of sum_{k=1}^{n-1} F_k F_{n-k} plus C, C = 1 for odd
/// n, else 0. Individual products need not have integer antiderivatives, so
/// each row sum is integrated as a whole.
///
/// Part 2: F_{n+1} + F_n - 1 against x times the double sum of row integrals.
/// Four readings are evaluated (outer bound n or n-1; constant ceil(n/2)
/// added after or before multiplying by x) and the per-reading match counts
/// are noted. The asserted reading is bound n with x (S + ceil(n/2)).
VerificationReport verify_integral_prop(std::size_t max_n);

struct ParallelsFinding {
  VerificationReport report;
  /// Instances with i >= 2 where the single-gamma form also holds / fails.
  std::size_t single_gamma_holds = 0;
  std::size_t single_gamma_fails = 0;
};

/// H(r+2i, k+j+i) - H(r+2i, k+i) = (-1)^i gamma^i (H(r, k+j) - H(r, k)) for
/// all i <= max_i, k + j <= r <= max_r. The gamma^1 form is evaluated on the
/// side and tallied in the finding.
ParallelsFinding verify_parallels_lemma(const Sequence& seq, std::size_t max_i, std::size_t max_r);

struct JohnsonSample {
  std::size_t a = 0, b = 0, c = 0, d = 0, t = 0;
};

/// Uniform samples with a + b = c + d, every index <= max_index, and
/// t <= min(a, b, c, d). Deterministic for a given seed.
std::vector<JohnsonSample> random_johnson_samples(std::size_t count, std::size_t max_index, std::uint64_t seed);

/// G_a G_b - G_c G_d = (-1)^t g^t (G_{a-t} G_{b-t} - G_{c-t} G_{d-t}), and
/// the four products of each side sit on the corners of an upright rectangle
/// of the Hosoya triangle. Throws ConstraintViolation on an invalid sample.
VerificationReport verify_johnson(const Sequence& seq, const std::vector<JohnsonSample>& samples);

/// Catalan G_m^2 - G_{m+r} G_{m-r} = (-1)^{m-r} g^{m-r} (G_r^2 - G_{2r} G_0)
/// for r <= m <= max_m, and Cassini (r = 1) for 1 <= m <= max_m.
VerificationReport verify_catalan_cassini(const Sequence& seq, std::size_t max_m);

/// For 1 <= n <= max_n on a Fibonacci-type sequence:
///   sum_{j=2}^{2n+1} I(j) G_j^2 = sum_{j=1}^{n} G_{4j+1}
///   sum_{j=2}^{2n+1} (-1)^{j+1} I(j)^2 G_{2j}^2 = d sum_{j=1}^{n} G_{8j+2}
/// The second left side is also formed by pairing consecutive terms, and any
/// disagreement between the two forms is noted. Throws NotFibonacciType.
VerificationReport verify_sums_theorem(const Sequence& seq, std::size_t max_n);

enum class ClosedSumPart {
  /// d sum_{j=1}^{n} g^{2(n-j)} G_{4j-3} = G_{2n-1} G_{2n}, plus the
  /// auxiliary sum_{j=1}^{n} d g^{n-j} G_j^2 = G_{n+1} G_n - g^n G_1 G_0.
  Weighted,
  /// g = 1 only: d sum_{j=1}^{2n-1} I(j) G_j^2 = G_{2n-1} G_{2n}.
  UnitG,
};

/// Both parts are checked cross-multiplied by d. Throws NotFibonacciType, or
/// RequiresUnitG for the UnitG part when g != 1.
VerificationReport verify_closed_sums(const Sequence& seq, std::size_t max_n, ClosedSumPart part);

}  // namespace gfpoly

#pragma once

#include <cstddef>
#include <vector>

#include "gfpoly/hosoya.hpp"
#include "gfpoly/poly.hpp"
#include "gfpoly/report.hpp"

namespace gfpoly {

/// F_k F_{k-1} ... F_1 over Fibonacci polynomials; fstar(0) = 1.
Poly fstar(std::size_t k);

struct GibonomialCoeff {
  std::size_t n = 0;
  std::size_t r = 0;
  Poly value;
};

/// [n r] = fstar(n) / (fstar(n-r) fstar(r)). Throws IndexError unless
/// 0 <= r <= n.
GibonomialCoeff gibonomial(std::size_t n, std::size_t r);

/// Rows 0..max_row, built row by row with [n r] = [n-1 r-1] F_n / F_r.
PolyTriangle gibonomial_triangle(std::size_t max_row);

/// Star of David around [n r]:
///   a1 = [n-1 r], a2 = [n r-1], a3 = [n+1 r+1],
///   b1 = [n-1 r-1], b2 = [n r+1], b3 = [n+1 r].
/// Asserts equal products and equal triple gcds. Also notes, without
/// asserting, whether gcd(a1,b3) gcd(b1,a3) equals the centre [n r].
/// Throws IndexError unless 1 <= r <= n - 1.
VerificationReport verify_gibonomial_star(std::size_t n, std::size_t r);

}  // namespace gfpoly

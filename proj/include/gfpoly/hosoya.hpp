#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gfpoly/gfp.hpp"
#include "gfpoly/poly.hpp"
#include "gfpoly/report.hpp"

namespace gfpoly {

/// Rectangular coordinates: row r, position k (0 <= k <= r).
struct RectCoord {
  std::size_t r = 0;
  std::size_t k = 0;
  friend bool operator==(const RectCoord&, const RectCoord&) = default;
};

/// Diagonal coordinates: the entry G_m G_n.
struct DiagCoord {
  std::size_t m = 0;
  std::size_t n = 0;
  friend bool operator==(const DiagCoord&, const DiagCoord&) = default;
};

/// (r, k) -> (k, r - k). Throws OutOfRange when k > r.
DiagCoord to_diag(RectCoord p);
/// (m, n) -> (m + n, m).
RectCoord to_rect(DiagCoord p);

struct TrianglePoint {
  RectCoord rect;
  DiagCoord diag;
  Poly value;
};

using PolyTriangle = std::vector<std::vector<Poly>>;

/// Rows 0..R of H(r, k) = G_k G_{r-k}, stored flat at r(r+1)/2 + k.
class HosoyaTriangle {
 public:
  static HosoyaTriangle build(const Sequence& seq, std::size_t max_row);

  const Sequence& sequence() const noexcept { return seq_; }
  const GfpSpec& spec() const noexcept { return seq_.spec(); }
  /// Number of rows (max_row + 1).
  std::size_t rows() const noexcept { return rows_; }

  /// Throws OutOfRange outside the built rows.
  const Poly& at(std::size_t r, std::size_t k) const;
  const Poly& at(RectCoord p) const { return at(p.r, p.k); }
  TrianglePoint point(RectCoord p) const;

  std::vector<Poly> row(std::size_t r) const;
  PolyTriangle to_rows() const;

 private:
  HosoyaTriangle(Sequence seq, std::size_t rows);

  Sequence seq_;
  std::size_t rows_ = 0;
  std::vector<Poly> entries_;
};

/// Checks H(r,k) = delta H(r-1,k) + gamma H(r-2,k) and
/// H(r,k) = delta H(r-1,k-1) + gamma H(r-2,k-2) for r > 1, 0 <= k <= r - 1.
/// Terms with a negative index (or a column past its row) are excluded, not
/// zero-padded. The two recursions are reported separately in the witness
/// labels. delta/gamma default to the spec's d and g.
VerificationReport verify_double_recursion(const HosoyaTriangle& t, std::optional<Poly> delta = std::nullopt,
                                           std::optional<Poly> gamma = std::nullopt);

/// Vertical rectangle property H(n, m) = delta H(n-1, m) + gamma H(n-2, m) in
/// both orientations (column measured from the left or from the right edge).
VerificationReport verify_rectangle_property(const HosoyaTriangle& t);

/// SD(G_n) = { H(n+i, n) = G_n G_i : i < len }.
std::vector<TrianglePoint> slash_diagonal(const Sequence& seq, std::size_t n, std::size_t len);
/// BD(G_m) = { H(m+i, i) = G_i G_m : i < len }.
std::vector<TrianglePoint> backslash_diagonal(const Sequence& seq, std::size_t m, std::size_t len);

/// The first `n` rows with nonzero entries of a Fibonacci-type triangle:
/// entries (r, k) with 1 <= k <= r - 1, rows r = 2..n+1. Throws
/// NotFibonacciType.
PolyTriangle initial_triangle(const Sequence& seq, std::size_t n);

}  // namespace gfpoly

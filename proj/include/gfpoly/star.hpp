#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gfpoly/gfp.hpp"
#include "gfpoly/hosoya.hpp"
#include "gfpoly/poly.hpp"
#include "gfpoly/report.hpp"

namespace gfpoly {

/// A: anchor (m, n) is the diagonal coordinate of a2.
/// B: anchor (m, n) is the diagonal coordinate of b2.
enum class Orientation { A, B };

std::string to_string(Orientation o);

/// Six hexagon vertices split into the triangles {a1,a2,a3} and {b1,b2,b3},
/// plus the interior point c. Positions are kept in diagonal coordinates.
struct StarConfig {
  Sequence seq;
  Orientation orientation = Orientation::A;
  DiagCoord anchor;
  std::array<DiagCoord, 3> a_pos{};
  std::array<DiagCoord, 3> b_pos{};
  DiagCoord c_pos;
  std::array<Poly, 3> a;
  std::array<Poly, 3> b;
  Poly c;
};

/// Throws OutOfBounds (A needs n >= 2; B needs m, n >= 2) or
/// DegenerateCenter (a2 sits at G_0 G_0).
StarConfig make_star(const Sequence& seq, Orientation orientation, std::size_t m, std::size_t n);

/// a1 a2 a3 == b1 b2 b3.
bool verify_product(const StarConfig& star);

enum class RatioClass { Equal, ScaledByBeta, ScaledByBetaPrime };
std::string to_string(RatioClass c);

/// gcd(a1,b3) gcd(b1,a3) = c G_t^exponent.
struct Part4Result {
  Poly value;
  unsigned exponent = 0;
  std::size_t t = 0;
};

struct StarReport {
  std::string family;
  Orientation orientation = Orientation::A;
  DiagCoord anchor;
  bool product_equal = false;
  Poly gcd_a;
  Poly gcd_b;
  RatioClass ratio_class = RatioClass::Equal;
  /// Integers (u, v) with u * gcd_a = v * gcd_b, i.e. the ratio is v / u.
  /// (1, 1) for Equal-class stars.
  Integer beta_u = 1;
  Integer beta_v = 1;
  /// True when the gcd claim for this class holds.
  bool gcd_claim_holds = false;
  /// False when the spec is outside the theorem's hypotheses (not theorem
  /// grade); the claim is then evaluated but not asserted.
  bool gcd_claim_asserted = true;
  std::optional<Part4Result> part4;

  bool ok() const { return product_equal && (!gcd_claim_asserted || gcd_claim_holds) && part4.has_value(); }
};

/// Classifies the star and evaluates the gcd claim for its class:
///  - Fibonacci type, m and n even (n = 2k1, m = 2k2): ScaledByBeta with
///    u = gcd(c, k1, k2), v = gcd(c, k1-1, k2+1) for A and
///    u = gcd(c, k1-1, k2-1), v = gcd(c, k1, k2) for B, c = content(d);
///  - Lucas type, m and n odd: ScaledByBetaPrime, same shape with c the
///    content of G_1 and (n, m), (n-2, m+2) [A] or (n-2, m-2) [B];
///  - otherwise Equal.
/// The scaled claim is u gcd_a = v gcd_b. Mixed integer/polynomial gcds such
/// as gcd(d(x), k1, k2) reduce to gcd(content(d), k1, k2) through the
/// degree-0 embedding. Throws NotTheoremGrade or NotTyped.
StarReport verify_gcd_theorem(const StarConfig& star);

/// Throws UnclassifiedPart4 when no exponent in {0,1,2} matches.
Part4Result verify_part4(const StarConfig& star);

/// Everything above for one star. Works on any typed spec; for specs that
/// are not theorem grade the gcd claim is computed but not asserted.
StarReport analyze_star(const StarConfig& star);

struct StarGrid {
  std::size_t m_max = 16;
  std::size_t n_max = 16;
  bool orientation_a = true;
  bool orientation_b = true;
};

/// Every valid anchor in the grid, sorted by (orientation, m, n).
std::vector<StarConfig> enumerate_stars(const Sequence& seq, const StarGrid& grid);

/// Outcome of one corollary on one family.
struct CorollaryResult {
  VerificationReport report;
  /// Anchors outside the hypotheses where the two gcds differ.
  std::vector<std::pair<Orientation, DiagCoord>> differing_outside;
};

/// Families named by the equal-gcd corollaries.
const std::vector<std::string>& corollary_families();

/// Runs every corollary that names the spec's family over the grid.
/// Throws FamilyNotCovered.
std::vector<CorollaryResult> verify_corollaries(const Sequence& seq, const StarGrid& grid);

nlohmann::json to_json(const StarReport& r);

}  // namespace gfpoly

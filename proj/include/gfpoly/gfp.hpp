#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gfpoly/poly.hpp"
#include "gfpoly/report.hpp"

namespace gfpoly {

/// The quadruple (p0, p1, d, g) of G_n = d G_{n-1} + g G_{n-2}, G_0 = p0,
/// G_1 = p1. Construction enforces the hard side conditions (constant p0;
/// nonzero p1, d, g; gcd(d, g) = 1). The extra coprimality conditions used by
/// the gcd theorems are reported by theorem_grade() instead of enforced.
class GfpSpec {
 public:
  GfpSpec(Poly p0, Poly p1, Poly d, Poly g, std::string family = {});

  const Poly& p0() const noexcept { return p0_; }
  const Poly& p1() const noexcept { return p1_; }
  const Poly& d() const noexcept { return d_; }
  const Poly& g() const noexcept { return g_; }
  const std::string& family() const noexcept { return family_; }

  /// gcd(p0,p1) = gcd(p0,d) = gcd(p0,g) = 1 when p0 != 0. Fibonacci-type
  /// specs (p0 = 0) are exempt because gcd(0, d) = d.
  bool theorem_grade() const noexcept { return theorem_grade_; }

  /// Same seeds and recurrence with delta/gamma replaced; skips validation.
  /// Used to build negative controls.
  GfpSpec with_recurrence(Poly d, Poly g) const;

  friend bool operator==(const GfpSpec& a, const GfpSpec& b) {
    return a.p0_ == b.p0_ && a.p1_ == b.p1_ && a.d_ == b.d_ && a.g_ == b.g_;
  }

 private:
  struct Unchecked {};
  GfpSpec(Unchecked, Poly p0, Poly p1, Poly d, Poly g, std::string family);

  Poly p0_, p1_, d_, g_;
  std::string family_;
  bool theorem_grade_ = false;
};

enum class GfpKind { LucasType, FibonacciType, Other };

std::string to_string(GfpKind k);

struct GfpClassification {
  GfpKind kind = GfpKind::Other;
  /// alpha = 2 / p0 stored as (numerator, denominator); Lucas type only.
  std::optional<std::pair<Integer, Integer>> alpha;
  /// gcd(d, G_1).
  Poly rho;
};

GfpClassification classify(const GfpSpec& spec);

/// Memoized view of the sequence. Copies share one thread-safe memo table, so
/// a Sequence can be passed by value into sweeps without recomputation.
class Sequence {
 public:
  explicit Sequence(GfpSpec spec);

  const GfpSpec& spec() const noexcept;
  GfpKind kind() const noexcept;

  /// G_n. The reference stays valid for the lifetime of this Sequence and all
  /// its copies.
  const Poly& term(std::size_t n) const;
  const Poly& operator[](std::size_t n) const { return term(n); }

 private:
  struct State;
  std::shared_ptr<State> state_;
};

// Catalog ------------------------------------------------------------------

/// The fourteen families (seven Lucas/Fibonacci conjugate pairs).
const std::vector<std::string>& builtin_family_names();
/// Everything builtin_family() accepts: the fourteen plus auxiliary entries
/// such as `pell_lucas_raw`.
const std::vector<std::string>& catalog_names();
/// Throws UnknownFamily.
GfpSpec builtin_family(std::string_view name);

// Structural checks --------------------------------------------------------

/// Compares the sequence with the symmetric-function form of its Binet
/// formula for n <= max_n: Lucas type 2 G_n = p0 (a^n + b^n); Fibonacci type
/// G_n = (a^n - b^n)/(a - b). Both right-hand sides are generated from their
/// own recurrences, so no surds appear. Throws NotBinetEligible for Other.
VerificationReport verify_binet_equivalence(const Sequence& seq, std::size_t max_n);

/// g^(k-1) (k d G_1 + g G_0) for m = 2k, g^k (k d G_0 + G_1) for m = 2k + 1.
Poly reduce_mod_d_squared(const Sequence& seq, std::size_t m);

/// For every m <= max_m, checks that G_m - reduce_mod_d_squared(m) is
/// divisible by d^2.
VerificationReport verify_mod_d_squared(const Sequence& seq, std::size_t max_m);

/// The five gcd-distance rules for all sequence indices <= max_index.
/// Throws NotTheoremGrade or NotTyped.
VerificationReport verify_gcd_distance(const Sequence& seq, std::size_t max_index);

}  // namespace gfpoly

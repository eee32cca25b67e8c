#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace gfpoly {

using Integer = mpz_class;

/// Dense univariate polynomial over Z. coeffs()[i] is the coefficient of x^i;
/// trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients at all.
class Poly {
 public:
  Poly() = default;
  Poly(long c);  // NOLINT(google-explicit-constructor): constants embed as degree 0
  Poly(const Integer& c);  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<Integer> coeffs);
  Poly(std::initializer_list<long> coeffs);

  static Poly x();
  static Poly monomial(const Integer& c, std::size_t exponent);

  /// Degree, or nullopt for the zero polynomial (degree minus infinity).
  std::optional<std::size_t> degree() const noexcept;
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }

  std::span<const Integer> coeffs() const noexcept { return coeffs_; }
  /// Coefficient of x^i; zero past the end.
  Integer coeff(std::size_t i) const;
  const Integer& leading() const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Integer& k);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Integer& k) { return a *= k; }
  friend Poly operator*(const Integer& k, Poly a) { return a *= k; }
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) = default;

 private:
  void trim();

  std::vector<Integer> coeffs_;
};

// Arithmetic ---------------------------------------------------------------

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly pow(const Poly& a, unsigned exponent);

/// Exact quotient a / b in Z[x]. Throws DivisionByZero or NotDivisible.
Poly exact_div(const Poly& a, const Poly& b);
/// Divides every coefficient by k; throws NotDivisible if any is not a multiple.
Poly exact_div(const Poly& a, const Integer& k);
/// True iff b divides a in Z[x] (b = 0 divides only 0).
bool divides(const Poly& b, const Poly& a);

/// Pseudo-remainder prem(a, b) = lc(b)^(deg a - deg b + 1) * a mod b.
Poly pseudo_remainder(const Poly& a, const Poly& b);

// Content and gcd ----------------------------------------------------------

/// Nonnegative gcd of the coefficients; content(0) = 0.
Integer content(const Poly& a);
/// a / content(a) with positive leading coefficient; pp(0) = 0.
Poly primitive_part(const Poly& a);
/// a with positive leading coefficient.
Poly canonical(const Poly& a);

/// Canonical gcd in Z[x]: gcd of contents times the primitive gcd, positive
/// leading coefficient. gcd(a, 0) = canonical(a), gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
/// Left fold of gcd. Throws EmptyInput on an empty list.
Poly gcd_many(std::span<const Poly> polys);
Poly gcd_many(std::initializer_list<Poly> polys);

// Calculus and evaluation --------------------------------------------------

Integer eval_at(const Poly& a, const Integer& x0);
Poly derivative(const Poly& a);
/// Formal antiderivative with constant term c. Throws NonIntegerIntegral if
/// some coefficient a_i is not divisible by i + 1.
Poly integrate(const Poly& a, const Integer& c = 0);

// Text format --------------------------------------------------------------

/// Descending terms, `k*x^e`, `x^1` printed `x`, unit coefficients elided
/// except on the constant term; zero prints as `0`.
std::string to_string(const Poly& a);
/// Inverse of to_string. Whitespace is ignored; repeated exponents are summed.
/// Throws ParseError.
Poly parse_poly(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Poly& a);

}  // namespace gfpoly

#pragma once

#include "gfpoly/poly.hpp"
#include "gfpoly/report.hpp"

namespace gfpoly {

/// Checks both gcd multiplicativity rules for one quadruple:
///   (1) gcd(p,q) = gcd(r,s) = 1  =>  gcd(pq,rs) = gcd(p,r) gcd(p,s) gcd(q,r) gcd(q,s)
///   (2) gcd(p,r) = gcd(q,s) = 1  =>  gcd(pq,rs) = gcd(p,s) gcd(q,r)
/// A part whose hypothesis fails is skipped and noted; the report is Vacuous
/// only when both are.
VerificationReport verify_gcd_multiplicativity(const Poly& p, const Poly& q, const Poly& r, const Poly& s);

}  // namespace gfpoly

#include <array>
#include <random>

namespace gfpoly {

/// Random polynomial of degree <= max_degree with coefficients in
/// [-coeff_bound, coeff_bound]; may be zero.
Poly random_poly(std::mt19937_64& rng, std::size_t max_degree, long coeff_bound);

/// Quadruple (p, q, r, s) assembled from a small pool of shared factors so
/// that both coprime and non-coprime pairs occur.
std::array<Poly, 4> random_lemma1_instance(std::mt19937_64& rng);

}  // namespace gfpoly

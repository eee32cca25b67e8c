#include "gfpoly/poly_checks.hpp"

namespace gfpoly {

namespace {

bool is_one(const Poly& a) { return a == Poly(1); }

}  // namespace

VerificationReport verify_gcd_multiplicativity(const Poly& p, const Poly& q, const Poly& r, const Poly& s) {
  VerificationReport rep("lemma1");
  rep.params = {{"p", to_string(p)}, {"q", to_string(q)}, {"r", to_string(r)}, {"s", to_string(s)}};
  const Poly lhs = gcd(p * q, r * s);

  if (is_one(gcd(p, q)) && is_one(gcd(r, s))) {
    const Poly rhs = gcd(p, r) * gcd(p, s) * gcd(q, r) * gcd(q, s);
    rep.record(lhs == canonical(rhs), {"part 1", {{"lhs", lhs}, {"rhs", rhs}}});
  } else {
    rep.skip();
    rep.note("part 1 vacuous: gcd(p,q) or gcd(r,s) is not 1");
  }

  if (is_one(gcd(p, r)) && is_one(gcd(q, s))) {
    const Poly rhs = gcd(p, s) * gcd(q, r);
    rep.record(lhs == canonical(rhs), {"part 2", {{"lhs", lhs}, {"rhs", rhs}}});
  } else {
    rep.skip();
    rep.note("part 2 vacuous: gcd(p,r) or gcd(q,s) is not 1");
  }
  return rep;
}

}  // namespace gfpoly

namespace gfpoly {

Poly random_poly(std::mt19937_64& rng, std::size_t max_degree, long coeff_bound) {
  std::uniform_int_distribution<std::size_t> deg(0, max_degree);
  std::uniform_int_distribution<long> coef(-coeff_bound, coeff_bound);
  std::vector<Integer> c(deg(rng) + 1);
  for (auto& v : c) v = coef(rng);
  return Poly(std::move(c));
}

std::array<Poly, 4> random_lemma1_instance(std::mt19937_64& rng) {
  static const std::array<Poly, 6> pool = {Poly{0, 1}, Poly{1, 1}, Poly{-1, 1}, Poly{1, 0, 1}, Poly{2}, Poly{1, 2}};
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> count(0, 2);
  std::array<Poly, 4> out;
  for (auto& p : out) {
    p = Poly(1);
    for (int i = count(rng); i > 0; --i) p *= pool[pick(rng)];
    Poly extra = random_poly(rng, 2, 3);
    if (!extra.is_zero()) p *= extra;
  }
  return out;
}

}  // namespace gfpoly

#pragma once

// Independent reference computations for the test suites. Nothing here calls
// the library's gcd, content or sequence code.

#include <cstddef>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "gfpoly/poly.hpp"

namespace oracle {

using gfpoly::Integer;
using gfpoly::Poly;

inline Integer coeff_gcd(const Poly& a) {
  Integer g = 0;
  for (const auto& c : a.coeffs()) g = ::gcd(g, c);
  return g;
}

// Euclid over Q[x]. Returns the canonical Z[x] gcd: gcd of the contents
// times the primitive associate of the monic rational gcd.
inline Poly gcd(const Poly& a, const Poly& b) {
  using Q = std::vector<mpq_class>;
  auto to_q = [](const Poly& p) {
    Q q;
    for (const auto& c : p.coeffs()) q.emplace_back(c);
    return q;
  };
  auto trim = [](Q& q) {
    while (!q.empty() && q.back() == 0) q.pop_back();
  };
  auto rem = [&](Q u, const Q& v) {
    while (u.size() >= v.size() && !u.empty()) {
      const mpq_class f = u.back() / v.back();
      const std::size_t shift = u.size() - v.size();
      for (std::size_t i = 0; i < v.size(); ++i) u[i + shift] -= f * v[i];
      trim(u);
    }
    return u;
  };
  Q u = to_q(a), v = to_q(b);
  if (u.empty() && v.empty()) return Poly(0);
  while (!v.empty()) {
    Q r = rem(u, v);
    u = std::move(v);
    v = std::move(r);
  }
  Integer den_lcm = 1;
  for (const auto& c : u) den_lcm = lcm(den_lcm, c.get_den());
  std::vector<Integer> z;
  for (const auto& c : u) z.push_back(mpz_class(c * den_lcm));
  Integer g = 0;
  for (const auto& c : z) g = ::gcd(g, c);
  if (z.back() < 0) g = -g;
  for (auto& c : z) c /= g;
  Poly primitive(std::move(z));
  Integer cont = ::gcd(coeff_gcd(a), coeff_gcd(b));
  return primitive * cont;
}

inline Integer eval(const Poly& p, const Integer& x0) {
  Integer acc = 0, power = 1;
  for (const auto& c : p.coeffs()) {
    acc += c * power;
    power *= x0;
  }
  return acc;
}

// Integer recurrence t_n = d t_{n-1} + g t_{n-2}.
inline std::vector<Integer> recurrence(Integer t0, Integer t1, Integer d, Integer g, std::size_t count) {
  std::vector<Integer> t{t0, t1};
  while (t.size() < count) t.push_back(d * t[t.size() - 1] + g * t[t.size() - 2]);
  t.resize(count);
  return t;
}

inline std::vector<Integer> fibonacci_numbers(std::size_t count) { return recurrence(0, 1, 1, 1, count); }

inline Integer fibonomial(std::size_t n, std::size_t k) {
  const auto f = fibonacci_numbers(n + 1);
  Integer num = 1, den = 1;
  for (std::size_t i = 0; i < k; ++i) {
    num *= f[n - i];
    den *= f[i + 1];
  }
  return num / den;
}

// A001511: 2-adic valuation of n, plus one.
inline unsigned ruler(std::size_t n) {
  unsigned e = 1;
  while (n % 2 == 0) {
    n /= 2;
    ++e;
  }
  return e;
}

}  // namespace oracle

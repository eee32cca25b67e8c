#include "gfpoly/gibonomial.hpp"

#include <mutex>
#include <string>

#include "gfpoly/error.hpp"
#include "gfpoly/gfp.hpp"

namespace gfpoly {

namespace {

const Sequence& fibonacci() {
  static const Sequence seq(builtin_family("fibonacci"));
  return seq;
}

// Rows of the gibonomial triangle, grown on demand and shared.
class GibonomialCache {
 public:
  const Poly& at(std::size_t n, std::size_t r) {
    std::lock_guard lock(mutex_);
    const auto& fib = fibonacci();
    while (rows_.size() <= n) {
      const std::size_t row = rows_.size();
      std::vector<Poly> next(row + 1);
      next.front() = 1;
      next.back() = 1;
      for (std::size_t k = 1; k < row; ++k) {
        next[k] = exact_div(rows_[row - 1][k - 1] * fib[row], fib[k]);
      }
      rows_.push_back(std::move(next));
    }
    return rows_[n][r];
  }

 private:
  std::mutex mutex_;
  std::vector<std::vector<Poly>> rows_;
};

GibonomialCache& cache() {
  static GibonomialCache c;
  return c;
}

void check_index(std::size_t n, std::size_t r) {
  if (r > n) throw Error(Errc::IndexError, "r=" + std::to_string(r) + " exceeds n=" + std::to_string(n));
}

}  // namespace

Poly fstar(std::size_t k) {
  Poly acc = 1;
  for (std::size_t i = 1; i <= k; ++i) acc *= fibonacci()[i];
  return acc;
}

GibonomialCoeff gibonomial(std::size_t n, std::size_t r) {
  check_index(n, r);
  return {n, r, cache().at(n, r)};
}

PolyTriangle gibonomial_triangle(std::size_t max_row) {
  PolyTriangle out(max_row + 1);
  for (std::size_t n = 0; n <= max_row; ++n) {
    out[n].reserve(n + 1);
    for (std::size_t r = 0; r <= n; ++r) out[n].push_back(cache().at(n, r));
  }
  return out;
}

VerificationReport verify_gibonomial_star(std::size_t n, std::size_t r) {
  if (r < 1 || r + 1 > n) {
    throw Error(Errc::IndexError, "star needs 1 <= r <= n-1, got n=" + std::to_string(n) + " r=" + std::to_string(r));
  }
  auto at = [](std::size_t nn, std::size_t rr) { return cache().at(nn, rr); };
  const Poly a1 = at(n - 1, r), a2 = at(n, r - 1), a3 = at(n + 1, r + 1);
  const Poly b1 = at(n - 1, r - 1), b2 = at(n, r + 1), b3 = at(n + 1, r);
  const Poly centre = at(n, r);

  VerificationReport rep("gibonomial-star");
  rep.params = {{"n", std::to_string(n)}, {"r", std::to_string(r)}};
  const std::string where = "n=" + std::to_string(n) + " r=" + std::to_string(r);

  const Poly pa = a1 * a2 * a3;
  const Poly pb = b1 * b2 * b3;
  rep.record(pa == pb, {"product " + where, {{"a1a2a3", pa}, {"b1b2b3", pb}}});

  const Poly ga = gcd_many({a1, a2, a3});
  const Poly gb = gcd_many({b1, b2, b3});
  rep.record(ga == gb, {"gcd " + where, {{"gcd_a", ga}, {"gcd_b", gb}}});

  const Poly cross = gcd(a1, b3) * gcd(b1, a3);
  rep.note(std::string("gcd(a1,b3)gcd(b1,a3) ") + (cross == canonical(centre) ? "equals" : "differs from") +
           " the centre: " + to_string(cross) + " vs " + to_string(centre));
  return rep;
}

}  // namespace gfpoly

#include "gfpoly/hosoya.hpp"

#include <string>
#include <utility>

#include "gfpoly/error.hpp"

namespace gfpoly {

DiagCoord to_diag(RectCoord p) {
  if (p.k > p.r) {
    throw Error(Errc::OutOfRange, "k=" + std::to_string(p.k) + " exceeds r=" + std::to_string(p.r));
  }
  return {p.k, p.r - p.k};
}

RectCoord to_rect(DiagCoord p) { return {p.m + p.n, p.m}; }

HosoyaTriangle::HosoyaTriangle(Sequence seq, std::size_t rows) : seq_(std::move(seq)), rows_(rows) {}

HosoyaTriangle HosoyaTriangle::build(const Sequence& seq, std::size_t max_row) {
  HosoyaTriangle t(seq, max_row + 1);
  t.entries_.reserve(t.rows_ * (t.rows_ + 1) / 2);
  for (std::size_t r = 0; r <= max_row; ++r) {
    for (std::size_t k = 0; k <= r; ++k) {
      if (k > r - k) {
        // Symmetric half: reuse the mirrored product.
        t.entries_.push_back(t.entries_[r * (r + 1) / 2 + (r - k)]);
      } else {
        t.entries_.push_back(seq[k] * seq[r - k]);
      }
    }
  }
  return t;
}

const Poly& HosoyaTriangle::at(std::size_t r, std::size_t k) const {
  if (r >= rows_ || k > r) {
    throw Error(Errc::OutOfRange, "(" + std::to_string(r) + "," + std::to_string(k) + ") outside triangle");
  }
  return entries_[r * (r + 1) / 2 + k];
}

TrianglePoint HosoyaTriangle::point(RectCoord p) const { return {p, to_diag(p), at(p)}; }

std::vector<Poly> HosoyaTriangle::row(std::size_t r) const {
  std::vector<Poly> out;
  out.reserve(r + 1);
  for (std::size_t k = 0; k <= r; ++k) out.push_back(at(r, k));
  return out;
}

PolyTriangle HosoyaTriangle::to_rows() const {
  PolyTriangle out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

namespace {

std::string rk(std::size_t r, std::size_t k) { return "r=" + std::to_string(r) + " k=" + std::to_string(k); }

}  // namespace

VerificationReport verify_double_recursion(const HosoyaTriangle& t, std::optional<Poly> delta,
                                           std::optional<Poly> gamma) {
  const Poly dl = delta.value_or(t.spec().d());
  const Poly gm = gamma.value_or(t.spec().g());
  VerificationReport rep("double-recursion");
  rep.params = {{"family", t.spec().family()}, {"rows", std::to_string(t.rows())}};
  if (t.rows() < 3) {
    rep.note("fewer than three rows; nothing to check");
    return rep;
  }
  for (std::size_t r = 2; r < t.rows(); ++r) {
    for (std::size_t k = 0; k + 1 <= r; ++k) {
      const Poly& h = t.at(r, k);
      // First recursion walks down column k; (r-2, k) must exist.
      if (k <= r - 2) {
        const Poly rhs = dl * t.at(r - 1, k) + gm * t.at(r - 2, k);
        rep.record(h == rhs, {"first " + rk(r, k), {{"H", h}, {"rhs", rhs}}});
      } else {
        rep.skip();
      }
      if (k >= 2) {
        const Poly rhs = dl * t.at(r - 1, k - 1) + gm * t.at(r - 2, k - 2);
        rep.record(h == rhs, {"second " + rk(r, k), {{"H", h}, {"rhs", rhs}}});
      } else {
        rep.skip();
      }
    }
  }
  return rep;
}

VerificationReport verify_rectangle_property(const HosoyaTriangle& t) {
  const Poly& dl = t.spec().d();
  const Poly& gm = t.spec().g();
  VerificationReport rep("rectangle");
  rep.params = {{"family", t.spec().family()}, {"rows", std::to_string(t.rows())}};
  for (std::size_t n = 2; n < t.rows(); ++n) {
    for (std::size_t m = 0; m + 2 <= n; ++m) {
      const Poly left = dl * t.at(n - 1, m) + gm * t.at(n - 2, m);
      rep.record(t.at(n, m) == left, {"left " + rk(n, m), {{"H", t.at(n, m)}, {"rhs", left}}});
      // Mirror: column m counted from the right edge of each row.
      const Poly right = dl * t.at(n - 1, n - 1 - m) + gm * t.at(n - 2, n - 2 - m);
      rep.record(t.at(n, n - m) == right, {"right " + rk(n, n - m), {{"H", t.at(n, n - m)}, {"rhs", right}}});
    }
  }
  return rep;
}

std::vector<TrianglePoint> slash_diagonal(const Sequence& seq, std::size_t n, std::size_t len) {
  std::vector<TrianglePoint> out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    const RectCoord rc{n + i, n};
    out.push_back({rc, to_diag(rc), seq[n] * seq[i]});
  }
  return out;
}

std::vector<TrianglePoint> backslash_diagonal(const Sequence& seq, std::size_t m, std::size_t len) {
  std::vector<TrianglePoint> out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    const RectCoord rc{m + i, i};
    out.push_back({rc, to_diag(rc), seq[i] * seq[m]});
  }
  return out;
}

PolyTriangle initial_triangle(const Sequence& seq, std::size_t n) {
  if (seq.kind() != GfpKind::FibonacciType) {
    throw Error(Errc::NotFibonacciType, seq.spec().family() + " has no zero edges");
  }
  PolyTriangle out;
  out.reserve(n);
  for (std::size_t r = 2; r < n + 2; ++r) {
    std::vector<Poly> row;
    row.reserve(r - 1);
    for (std::size_t k = 1; k + 1 <= r; ++k) row.push_back(seq[k] * seq[r - k]);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace gfpoly

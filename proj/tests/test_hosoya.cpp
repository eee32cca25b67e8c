#include <doctest.h>

#include "gfpoly/error.hpp"
#include "gfpoly/hosoya.hpp"
#include "oracles.hpp"

using namespace gfpoly;

namespace {

Poly P(const char* s) { return parse_poly(s); }

std::vector<Poly> values(const std::vector<TrianglePoint>& pts) {
  std::vector<Poly> out;
  for (const auto& p : pts) out.push_back(p.value);
  return out;
}

}  // namespace

TEST_SUITE("hosoya") {
  TEST_CASE("build") {
    const auto t = HosoyaTriangle::build(Sequence(builtin_family("fibonacci")), 8);
    CHECK(t.rows() == 9);
    CHECK(t.row(4) == std::vector<Poly>{0, P("x^2+1"), P("x^2"), P("x^2+1"), 0});
    CHECK(t.at(6, 2) == P("x") * P("x^3+2*x"));
    CHECK(t.at(6, 2) == P("x^4+2*x^2"));
    CHECK_THROWS_AS(t.at(9, 0), Error);
    CHECK_THROWS_AS(t.at(3, 4), Error);

    for (const auto& name : catalog_names()) {
      Sequence s(builtin_family(name));
      const auto h = HosoyaTriangle::build(s, 10);
      const auto& sp = s.spec();
      CHECK(h.at(0, 0) == sp.p0() * sp.p0());
      CHECK(h.at(1, 0) == sp.p0() * sp.p1());
      CHECK(h.at(1, 1) == sp.p0() * sp.p1());
      CHECK(h.at(2, 1) == sp.p1() * sp.p1());
      for (std::size_t r = 0; r <= 10; ++r) {
        for (std::size_t k = 0; k <= r; ++k) {
          CHECK(h.at(r, k) == h.at(r, r - k));
          CHECK(h.at(r, k) == s[k] * s[r - k]);
        }
      }
    }
  }

  TEST_CASE("numeric triangle at x = 1 matches Fibonacci products") {
    const auto f = oracle::fibonacci_numbers(25);
    const auto t = HosoyaTriangle::build(Sequence(builtin_family("fibonacci")), 20);
    for (std::size_t r = 0; r <= 20; ++r) {
      for (std::size_t k = 0; k <= r; ++k) CHECK(eval_at(t.at(r, k), 1) == f[k] * f[r - k]);
    }
  }

  TEST_CASE("double recursion") {
    for (const auto& name : builtin_family_names()) {
      const auto t = HosoyaTriangle::build(Sequence(builtin_family(name)), 10);
      CAPTURE(name);
      CHECK(verify_double_recursion(t).outcome == Outcome::Pass);
      CHECK(verify_rectangle_property(t).outcome == Outcome::Pass);
    }
    const auto fib = HosoyaTriangle::build(Sequence(builtin_family("fibonacci")), 10);
    const auto bad = verify_double_recursion(fib, P("x+1"), std::nullopt);
    CHECK(bad.outcome == Outcome::Fail);
    REQUIRE_FALSE(bad.failures.empty());
    CHECK(bad.failures.front().where.find("r=") != std::string::npos);

    const auto mutated = Sequence(builtin_family("vieta").with_recurrence(P("x+1"), -1));
    const auto vt = HosoyaTriangle::build(Sequence(builtin_family("vieta")), 10);
    CHECK(verify_double_recursion(vt, mutated.spec().d(), mutated.spec().g()).outcome == Outcome::Fail);
  }

  TEST_CASE("coordinates") {
    CHECK(to_diag({6, 3}) == DiagCoord{3, 3});
    CHECK(to_diag({4, 1}) == DiagCoord{1, 3});
    CHECK(to_rect({2, 5}) == RectCoord{7, 2});
    CHECK_THROWS_AS(to_diag({2, 3}), Error);
    for (std::size_t r = 0; r < 12; ++r) {
      for (std::size_t k = 0; k <= r; ++k) CHECK(to_rect(to_diag({r, k})) == RectCoord{r, k});
    }
    const auto t = HosoyaTriangle::build(Sequence(builtin_family("lucas")), 6);
    const auto pt = t.point({5, 2});
    CHECK(pt.diag == DiagCoord{2, 3});
    CHECK(pt.value == t.sequence()[2] * t.sequence()[3]);
  }

  TEST_CASE("diagonals") {
    Sequence fib(builtin_family("fibonacci"));
    CHECK(values(slash_diagonal(fib, 2, 3)) == std::vector<Poly>{0, P("x"), P("x^2")});
    for (const auto& v : values(slash_diagonal(fib, 0, 6))) CHECK(v.is_zero());
    Sequence luc(builtin_family("lucas"));
    CHECK(values(backslash_diagonal(luc, 0, 2)) == std::vector<Poly>{4, P("2*x")});
    for (const auto& p : slash_diagonal(luc, 3, 5)) CHECK(p.diag.m == 3);
    for (const auto& p : backslash_diagonal(luc, 3, 5)) CHECK(p.diag.n == 3);
  }

  TEST_CASE("initial triangle") {
    Sequence fib(builtin_family("fibonacci"));
    CHECK(initial_triangle(fib, 2) == PolyTriangle{{1}, {P("x"), P("x")}});
    const auto t = initial_triangle(fib, 5);
    REQUIRE(t.size() == 5);
    CHECK(t[4] == std::vector<Poly>{P("x^4+3*x^2+1"), P("x") * P("x^3+2*x"), pow(P("x^2+1"), 2),
                                    P("x") * P("x^3+2*x"), P("x^4+3*x^2+1")});
    CHECK_THROWS_AS(initial_triangle(Sequence(builtin_family("lucas")), 3), Error);
  }
}

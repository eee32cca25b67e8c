#include <doctest.h>

#include "gfpoly/error.hpp"
#include "gfpoly/identities.hpp"

using namespace gfpoly;

namespace {

Poly P(const char* s) { return parse_poly(s); }

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no exception");
  return Errc::ParseError;
}

std::vector<Sequence> fibonacci_types() {
  std::vector<Sequence> out;
  for (const auto& name : builtin_family_names()) {
    Sequence s(builtin_family(name));
    if (s.kind() == GfpKind::FibonacciType) out.push_back(s);
  }
  return out;
}

}  // namespace

TEST_SUITE("identities") {
  TEST_CASE("parity weight") {
    const auto j = builtin_family("jacobsthal");
    CHECK(parity_weight(j, 4) == P("2*x"));
    CHECK(parity_weight(j, 3) == Poly(1));
  }

  TEST_CASE("derivative and integrals") {
    Sequence fib(builtin_family("fibonacci"));
    CHECK(derivative(fib[4]) == P("3*x^2+2"));
    CHECK(derivative(fib[4]) == fib[1] * fib[3] + fib[2] * fib[2] + fib[3] * fib[1]);
    CHECK(verify_derivative_identity(20).outcome == Outcome::Pass);
    CHECK(integrate(fib[1] * fib[2] + fib[2] * fib[1], 1) == fib[3]);
    CHECK(integrate(fib[1] * fib[1], 0) == fib[2]);
    const auto r = verify_integral_prop(20);
    CHECK(r.outcome == Outcome::Pass);
    CHECK_FALSE(r.notes.empty());
  }

  TEST_CASE("parallels") {
    for (const auto& name : builtin_family_names()) {
      const auto f = verify_parallels_lemma(Sequence(builtin_family(name)), 4, 10);
      CAPTURE(name);
      CHECK(f.report.outcome == Outcome::Pass);
      if (builtin_family(name).g() == Poly(1)) CHECK(f.single_gamma_fails == 0);
    }
    const auto fermat = verify_parallels_lemma(Sequence(builtin_family("fermat")), 3, 8);
    CHECK(fermat.single_gamma_fails > 0);
  }

  TEST_CASE("johnson") {
    Sequence fib(builtin_family("fibonacci"));
    CHECK(verify_johnson(fib, {{3, 3, 2, 4, 1}}).outcome == Outcome::Pass);
    CHECK(fib[3] * fib[3] - fib[2] * fib[4] == Poly(1));
    CHECK(verify_johnson(fib, {{5, 7, 5, 7, 3}}).outcome == Outcome::Pass);
    CHECK(code_of([&] { verify_johnson(fib, {{3, 3, 2, 5, 1}}); }) == Errc::ConstraintViolation);
    CHECK(code_of([&] { verify_johnson(fib, {{3, 3, 2, 4, 3}}); }) == Errc::ConstraintViolation);

    const auto a = random_johnson_samples(200, 30, 99);
    const auto b = random_johnson_samples(200, 30, 99);
    REQUIRE(a.size() == 200);
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].a + a[i].b == a[i].c + a[i].d);
      CHECK(std::max({a[i].a, a[i].b, a[i].c, a[i].d}) <= 30);
      CHECK(a[i].t <= std::min({a[i].a, a[i].b, a[i].c, a[i].d}));
      CHECK(a[i].a == b[i].a);
      CHECK(a[i].t == b[i].t);
    }
    CHECK(verify_johnson(Sequence(builtin_family("pell")), a).outcome == Outcome::Pass);
  }

  TEST_CASE("catalan and cassini") {
    Sequence fib(builtin_family("fibonacci"));
    CHECK(fib[2] * fib[2] - fib[1] * fib[3] == Poly(-1));
    for (const auto& name : builtin_family_names()) {
      CHECK(verify_catalan_cassini(Sequence(builtin_family(name)), 20).outcome == Outcome::Pass);
    }
  }

  TEST_CASE("sums") {
    Sequence fib(builtin_family("fibonacci"));
    CHECK(fib[2] * fib[2] + fib[3] * fib[3] == fib[5]);
    for (const auto& s : fibonacci_types()) CHECK(verify_sums_theorem(s, 10).outcome == Outcome::Pass);
    CHECK(code_of([] { verify_sums_theorem(Sequence(builtin_family("lucas")), 3); }) == Errc::NotFibonacciType);
  }

  TEST_CASE("closed sums") {
    for (const auto& s : fibonacci_types()) {
      CHECK(verify_closed_sums(s, 10, ClosedSumPart::Weighted).outcome == Outcome::Pass);
    }
    CHECK(verify_closed_sums(Sequence(builtin_family("pell")), 10, ClosedSumPart::UnitG).outcome ==
          Outcome::Pass);
    CHECK(verify_closed_sums(Sequence(builtin_family("fibonacci")), 10, ClosedSumPart::UnitG).outcome ==
          Outcome::Pass);
    CHECK(code_of([] { verify_closed_sums(Sequence(builtin_family("fermat")), 4, ClosedSumPart::UnitG); }) ==
          Errc::RequiresUnitG);
    CHECK(code_of([] { verify_closed_sums(Sequence(builtin_family("lucas")), 4, ClosedSumPart::Weighted); }) ==
          Errc::NotFibonacciType);
  }
}

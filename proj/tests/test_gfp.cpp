#include <set>
#include <thread>

#include <doctest.h>

#include "gfpoly/error.hpp"
#include "gfpoly/gfp.hpp"
#include "oracles.hpp"

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

}  // namespace

TEST_SUITE("gfp") {
  TEST_CASE("spec validation") {
    CHECK(code_of([] { GfpSpec(P("x"), 1, P("x"), 1); }) == Errc::InvalidSpec);
    CHECK(code_of([] { GfpSpec(0, 0, P("x"), 1); }) == Errc::InvalidSpec);
    CHECK(code_of([] { GfpSpec(0, 1, 0, 1); }) == Errc::InvalidSpec);
    CHECK(code_of([] { GfpSpec(0, 1, P("x"), 0); }) == Errc::InvalidSpec);
    CHECK(code_of([] { GfpSpec(0, 1, P("2*x"), 2); }) == Errc::InvalidSpec);
    CHECK_NOTHROW(GfpSpec(0, 1, P("x"), 1));
  }

  TEST_CASE("terms") {
    Sequence fib(builtin_family("fibonacci"));
    CHECK(fib[5] == P("x^4+3*x^2+1"));
    CHECK(fib[0] == Poly(0));
    Sequence fermat(builtin_family("fermat"));
    CHECK(fermat[3] == P("9*x^2-2"));
    for (const auto& name : catalog_names()) {
      Sequence s(builtin_family(name));
      CHECK(s[0] == s.spec().p0());
      CHECK(s[1] == s.spec().p1());
    }
  }

  TEST_CASE("terms evaluated at integers follow the integer recurrence") {
    for (const auto& name : builtin_family_names()) {
      Sequence s(builtin_family(name));
      const auto& sp = s.spec();
      for (long x0 : {-2L, 1L, 3L}) {
        const auto ints = oracle::recurrence(oracle::eval(sp.p0(), x0), oracle::eval(sp.p1(), x0),
                                             oracle::eval(sp.d(), x0), oracle::eval(sp.g(), x0), 25);
        for (std::size_t n = 0; n < ints.size(); ++n) {
          CAPTURE(name);
          CAPTURE(n);
          CHECK(eval_at(s[n], x0) == ints[n]);
        }
      }
    }
  }

  TEST_CASE("sequence copies share the memo and are thread safe") {
    Sequence a(builtin_family("pell"));
    Sequence b = a;
    const Poly* p = &a[30];
    CHECK(&b[30] == p);
    std::vector<std::thread> threads;
    std::vector<Poly> got(8);
    for (int t = 0; t < 8; ++t) threads.emplace_back([&, t] { got[t] = b[60 + t]; });
    for (auto& t : threads) t.join();
    for (int t = 0; t < 8; ++t) CHECK(got[t] == a[60 + t]);
    CHECK(&a[30] == p);
  }

  TEST_CASE("catalog") {
    CHECK(builtin_family_names().size() == 14);
    CHECK(std::set(builtin_family_names().begin(), builtin_family_names().end()).size() == 14);
    CHECK(builtin_family("fermat_lucas") == GfpSpec(2, P("3*x"), P("3*x"), -2));
    CHECK(builtin_family("fibonacci") == GfpSpec(0, 1, P("x"), 1));
    CHECK(builtin_family("pell_lucas_prime") == GfpSpec(1, P("x"), P("2*x"), 1));
    CHECK(builtin_family("lucas") == GfpSpec(2, P("x"), P("x"), 1));
    CHECK(builtin_family("pell_lucas_raw") == GfpSpec(2, P("2*x"), P("2*x"), 1));
    CHECK_FALSE(builtin_family("pell_lucas_raw").theorem_grade());
    CHECK(code_of([] { builtin_family("bogus"); }) == Errc::UnknownFamily);
    // seven conjugate pairs
    std::size_t lucas = 0, fib = 0;
    for (const auto& name : builtin_family_names()) {
      const auto k = classify(builtin_family(name)).kind;
      lucas += k == GfpKind::LucasType;
      fib += k == GfpKind::FibonacciType;
    }
    CHECK(lucas == 7);
    CHECK(fib == 7);
  }

  TEST_CASE("classification") {
    CHECK(classify(builtin_family("lucas")).kind == GfpKind::LucasType);
    CHECK(classify(builtin_family("fibonacci")).kind == GfpKind::FibonacciType);
    CHECK(classify(GfpSpec(0, 2, P("x"), 1)).kind == GfpKind::Other);
    const auto c = classify(builtin_family("chebyshev1"));
    REQUIRE(c.alpha);
    CHECK(c.alpha->first == 2);
    CHECK(c.alpha->second == 1);
    CHECK(classify(builtin_family("fermat_lucas")).rho == P("3*x"));
  }

  TEST_CASE("theorem grade") {
    CHECK(builtin_family("fibonacci").theorem_grade());
    CHECK(builtin_family("lucas").theorem_grade());
    CHECK_FALSE(builtin_family("fermat_lucas").theorem_grade());
    CHECK_FALSE(builtin_family("jacobsthal_lucas").theorem_grade());
  }

  TEST_CASE("binet equivalence") {
    for (const auto& name : builtin_family_names()) {
      CAPTURE(name);
      CHECK(verify_binet_equivalence(Sequence(builtin_family(name)), 20).outcome == Outcome::Pass);
    }
    CHECK(code_of([] { verify_binet_equivalence(Sequence(GfpSpec(0, 2, P("x"), 1)), 5); }) ==
          Errc::NotBinetEligible);
    // a mutated delta leaves the Lucas shape 2 p1 = p0 d
    Sequence bad(builtin_family("lucas").with_recurrence(P("x+1"), 1));
    CHECK(code_of([&] { verify_binet_equivalence(bad, 6); }) == Errc::NotBinetEligible);
  }

  TEST_CASE("reduction modulo d squared") {
    Sequence fib(builtin_family("fibonacci"));
    CHECK(reduce_mod_d_squared(fib, 1) == Poly(1));
    CHECK(reduce_mod_d_squared(fib, 4) == P("2*x"));
    CHECK(reduce_mod_d_squared(Sequence(builtin_family("jacobsthal")), 2) == Poly(1));
    for (const auto& name : builtin_family_names()) {
      CHECK(verify_mod_d_squared(Sequence(builtin_family(name)), 30).outcome == Outcome::Pass);
    }
  }

  TEST_CASE("gcd distance") {
    Sequence fib(builtin_family("fibonacci"));
    CHECK(gcd(fib[2], fib[4]) == fib[2]);
    CHECK(verify_gcd_distance(fib, 12).outcome == Outcome::Pass);
    Sequence luc(builtin_family("lucas"));
    CHECK(gcd(luc[1], luc[3]) == luc[1]);
    CHECK(verify_gcd_distance(luc, 12).outcome == Outcome::Pass);
    CHECK(code_of([] { verify_gcd_distance(Sequence(builtin_family("fermat_lucas")), 5); }) ==
          Errc::NotTheoremGrade);
    CHECK(code_of([] { verify_gcd_distance(Sequence(GfpSpec(0, 2, P("x"), 1)), 5); }) == Errc::NotTyped);
  }
}

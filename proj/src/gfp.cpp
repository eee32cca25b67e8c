#include "gfpoly/gfp.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <utility>

#include "gfpoly/error.hpp"

namespace gfpoly {

namespace {

bool is_one(const Poly& a) { return a == Poly(1); }

}  // namespace

GfpSpec::GfpSpec(Unchecked, Poly p0, Poly p1, Poly d, Poly g, std::string family)
    : p0_(std::move(p0)), p1_(std::move(p1)), d_(std::move(d)), g_(std::move(g)), family_(std::move(family)) {
  theorem_grade_ = p0_.is_zero() || (is_one(gcd(p0_, p1_)) && is_one(gcd(p0_, d_)) && is_one(gcd(p0_, g_)));
}

GfpSpec::GfpSpec(Poly p0, Poly p1, Poly d, Poly g, std::string family)
    : GfpSpec(Unchecked{}, std::move(p0), std::move(p1), std::move(d), std::move(g), std::move(family)) {
  if (!p0_.is_constant()) throw Error(Errc::InvalidSpec, "p0 must be a constant, got " + to_string(p0_));
  if (p1_.is_zero() || d_.is_zero() || g_.is_zero()) {
    throw Error(Errc::InvalidSpec, "p1, d and g must be nonzero");
  }
  if (!is_one(gcd(d_, g_))) {
    throw Error(Errc::InvalidSpec, "gcd(d, g) = " + to_string(gcd(d_, g_)) + ", expected 1");
  }
}

GfpSpec GfpSpec::with_recurrence(Poly d, Poly g) const {
  return GfpSpec(Unchecked{}, p0_, p1_, std::move(d), std::move(g), family_);
}

std::string to_string(GfpKind k) {
  switch (k) {
    case GfpKind::LucasType: return "lucas";
    case GfpKind::FibonacciType: return "fibonacci";
    case GfpKind::Other: return "other";
  }
  return "?";
}

GfpClassification classify(const GfpSpec& spec) {
  GfpClassification c;
  c.rho = gcd(spec.d(), spec.p1());
  if (!spec.p0().is_zero() && spec.p1() * Integer(2) == spec.p0() * spec.d()) {
    c.kind = GfpKind::LucasType;
    c.alpha = std::make_pair(Integer(2), spec.p0().coeff(0));
  } else if (spec.p0().is_zero() && is_one(spec.p1())) {
    c.kind = GfpKind::FibonacciType;
  }
  return c;
}

// Sequence -----------------------------------------------------------------

struct Sequence::State {
  explicit State(GfpSpec s) : spec(std::move(s)), kind(classify(spec).kind) {
    terms.push_back(spec.p0());
    terms.push_back(spec.p1());
  }

  GfpSpec spec;
  GfpKind kind;
  std::mutex mutex;
  std::deque<Poly> terms;  // deque: push_back keeps references stable
};

Sequence::Sequence(GfpSpec spec) : state_(std::make_shared<State>(std::move(spec))) {}

const GfpSpec& Sequence::spec() const noexcept { return state_->spec; }
GfpKind Sequence::kind() const noexcept { return state_->kind; }

const Poly& Sequence::term(std::size_t n) const {
  std::lock_guard lock(state_->mutex);
  auto& t = state_->terms;
  const Poly& d = state_->spec.d();
  const Poly& g = state_->spec.g();
  while (t.size() <= n) {
    const std::size_t k = t.size();
    t.push_back(d * t[k - 1] + g * t[k - 2]);
  }
  return t[n];
}

// Catalog ------------------------------------------------------------------

namespace {

struct CatalogEntry {
  const char* name;
  const char* p0;
  const char* p1;
  const char* d;
  const char* g;
};

// d = a + b and g = -ab for the characteristic roots a, b of each family.
constexpr CatalogEntry kCatalog[] = {
    {"fibonacci", "0", "1", "x", "1"},
    {"lucas", "2", "x", "x", "1"},
    {"pell", "0", "1", "2*x", "1"},
    {"pell_lucas_prime", "1", "x", "2*x", "1"},
    {"fermat", "0", "1", "3*x", "-2"},
    {"fermat_lucas", "2", "3*x", "3*x", "-2"},
    {"chebyshev1", "1", "x", "2*x", "-1"},
    {"chebyshev2", "0", "1", "2*x", "-1"},
    {"jacobsthal", "0", "1", "1", "2*x"},
    {"jacobsthal_lucas", "2", "1", "1", "2*x"},
    {"morgan_voyce_B", "0", "1", "x+2", "-1"},
    {"morgan_voyce_C", "2", "x+2", "x+2", "-1"},
    {"vieta", "0", "1", "x", "-1"},
    {"vieta_lucas", "2", "x", "x", "-1"},
    // Plain Pell-Lucas violates gcd(p0, p1) = 1; kept for triangle output only.
    {"pell_lucas_raw", "2", "2*x", "2*x", "1"},
};

constexpr std::size_t kBuiltinCount = 14;

}  // namespace

const std::vector<std::string>& builtin_family_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (std::size_t i = 0; i < kBuiltinCount; ++i) v.emplace_back(kCatalog[i].name);
    return v;
  }();
  return names;
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& e : kCatalog) v.emplace_back(e.name);
    return v;
  }();
  return names;
}

GfpSpec builtin_family(std::string_view name) {
  for (const auto& e : kCatalog) {
    if (name == e.name) {
      return GfpSpec(parse_poly(e.p0), parse_poly(e.p1), parse_poly(e.d), parse_poly(e.g), e.name);
    }
  }
  throw Error(Errc::UnknownFamily, std::string(name));
}

// Structural checks --------------------------------------------------------

namespace {

std::string label(const GfpSpec& s) { return s.family().empty() ? std::string("custom") : s.family(); }

}  // namespace

VerificationReport verify_binet_equivalence(const Sequence& seq, std::size_t max_n) {
  const GfpSpec& spec = seq.spec();
  if (seq.kind() == GfpKind::Other) {
    throw Error(Errc::NotBinetEligible, label(spec) + " is neither Lucas nor Fibonacci type");
  }
  VerificationReport rep("binet");
  rep.params = {{"family", label(spec)}, {"n_max", std::to_string(max_n)}, {"type", to_string(seq.kind())}};

  const bool lucas = seq.kind() == GfpKind::LucasType;
  // Power sums s_n = a^n + b^n, or divided differences r_n = (a^n - b^n)/(a - b).
  Poly prev = lucas ? Poly(2) : Poly(0);
  Poly cur = lucas ? spec.d() : Poly(1);
  for (std::size_t n = 0; n <= max_n; ++n) {
    const Poly& closed = n == 0 ? prev : cur;
    const Poly lhs = lucas ? seq[n] * Integer(2) : seq[n];
    const Poly rhs = lucas ? spec.p0() * closed : closed;
    rep.record(lhs == rhs, {"n=" + std::to_string(n), {{"lhs", lhs}, {"rhs", rhs}}});
    if (n >= 1) {
      Poly next = spec.d() * cur + spec.g() * prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
  }
  return rep;
}

Poly reduce_mod_d_squared(const Sequence& seq, std::size_t m) {
  const GfpSpec& s = seq.spec();
  const std::size_t k = m / 2;
  const Integer kk(static_cast<unsigned long>(k));
  if (m % 2 == 1) {
    return pow(s.g(), static_cast<unsigned>(k)) * (kk * s.d() * s.p0() + s.p1());
  }
  if (k == 0) return s.p0();  // m = 0: G_0 itself
  return pow(s.g(), static_cast<unsigned>(k - 1)) * (kk * s.d() * s.p1() + s.g() * s.p0());
}

VerificationReport verify_mod_d_squared(const Sequence& seq, std::size_t max_m) {
  VerificationReport rep("mod-d2");
  rep.params = {{"family", label(seq.spec())}, {"m_max", std::to_string(max_m)}};
  const Poly d2 = seq.spec().d() * seq.spec().d();
  for (std::size_t m = 0; m <= max_m; ++m) {
    const Poly closed = reduce_mod_d_squared(seq, m);
    const Poly diff = seq[m] - closed;
    rep.record(divides(d2, diff), {"m=" + std::to_string(m), {{"G_m", seq[m]}, {"closed_form", closed}}});
  }
  return rep;
}

VerificationReport verify_gcd_distance(const Sequence& seq, std::size_t max_index) {
  const GfpSpec& s = seq.spec();
  if (!s.theorem_grade()) throw Error(Errc::NotTheoremGrade, label(s));
  if (seq.kind() == GfpKind::Other) throw Error(Errc::NotTyped, label(s) + " is neither Lucas nor Fibonacci type");
  const bool lucas = seq.kind() == GfpKind::LucasType;

  VerificationReport rep("gcd-distance");
  rep.params = {{"family", label(s)}, {"index_max", std::to_string(max_index)}, {"type", to_string(seq.kind())}};

  auto check = [&](const std::string& where, const Poly& got, const Poly& want) {
    rep.record(got == want, {where, {{"gcd", got}, {"expected", want}}});
  };
  const Poly one(1);
  const Poly g1 = canonical(s.p1());

  for (std::size_t n = 1; 2 * n + 1 <= max_index; ++n) {
    check("part1 n=" + std::to_string(n), gcd(s.d(), seq[2 * n + 1]), g1);
  }
  for (std::size_t n = 1; 2 * n <= max_index; ++n) {
    check("part2 n=" + std::to_string(n), gcd(s.d(), seq[2 * n]), lucas ? one : canonical(s.d()));
  }
  for (std::size_t n = 1; n <= max_index; ++n) {
    check("part3 n=" + std::to_string(n), gcd(s.g(), seq[n]), one);
  }
  const Poly paired = lucas ? g1 : canonical(seq[2]);
  for (std::size_t m = 1; m <= max_index; ++m) {
    for (std::size_t n = 1; n <= max_index; ++n) {
      const std::size_t dist = m > n ? m - n : n - m;
      if (dist == 0 || dist > 2) continue;
      const bool special = lucas ? (m % 2 == 1 && n % 2 == 1) : (m % 2 == 0 && n % 2 == 0);
      check(std::string(lucas ? "part4" : "part5") + " m=" + std::to_string(m) + " n=" + std::to_string(n),
            gcd(seq[m], seq[n]), special ? paired : one);
    }
  }
  return rep;
}

}  // namespace gfpoly

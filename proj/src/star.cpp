#include "gfpoly/star.hpp"

#include <algorithm>
#include <functional>
#include <utility>

#include "gfpoly/error.hpp"

namespace gfpoly {

std::string to_string(Orientation o) { return o == Orientation::A ? "a" : "b"; }

std::string to_string(RatioClass c) {
  switch (c) {
    case RatioClass::Equal: return "Equal";
    case RatioClass::ScaledByBeta: return "ScaledByBeta";
    case RatioClass::ScaledByBetaPrime: return "ScaledByBetaPrime";
  }
  return "?";
}

namespace {

std::string anchor_label(Orientation o, std::size_t m, std::size_t n) {
  return "orientation=" + to_string(o) + " m=" + std::to_string(m) + " n=" + std::to_string(n);
}

Integer igcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer igcd3(const Integer& a, long b, long c) { return igcd(igcd(a, Integer(b)), Integer(c)); }

}  // namespace

StarConfig make_star(const Sequence& seq, Orientation orientation, std::size_t m, std::size_t n) {
  const bool is_a = orientation == Orientation::A;
  if (n < 2 || (!is_a && m < 2)) {
    throw Error(Errc::OutOfBounds, anchor_label(orientation, m, n));
  }
  StarConfig s{seq, orientation, {m, n}, {}, {}, {}, {}, {}, {}};
  if (is_a) {
    s.a_pos = {DiagCoord{m + 1, n - 2}, DiagCoord{m, n}, DiagCoord{m + 2, n - 1}};
    s.b_pos = {DiagCoord{m, n - 1}, DiagCoord{m + 2, n - 2}, DiagCoord{m + 1, n}};
    s.c_pos = {m + 1, n - 1};
  } else {
    s.a_pos = {DiagCoord{m, n - 1}, DiagCoord{m - 2, n - 2}, DiagCoord{m - 1, n}};
    s.b_pos = {DiagCoord{m - 1, n - 2}, DiagCoord{m, n}, DiagCoord{m - 2, n - 1}};
    s.c_pos = {m - 1, n - 1};
  }
  if (s.a_pos[1] == DiagCoord{0, 0}) {
    throw Error(Errc::DegenerateCenter, anchor_label(orientation, m, n));
  }
  auto value = [&](DiagCoord p) { return seq[p.m] * seq[p.n]; };
  for (std::size_t i = 0; i < 3; ++i) {
    s.a[i] = value(s.a_pos[i]);
    s.b[i] = value(s.b_pos[i]);
  }
  s.c = value(s.c_pos);
  return s;
}

bool verify_product(const StarConfig& star) {
  return star.a[0] * star.a[1] * star.a[2] == star.b[0] * star.b[1] * star.b[2];
}

namespace {

void classify_gcds(const StarConfig& star, StarReport& rep) {
  const GfpKind kind = star.seq.kind();
  const GfpSpec& spec = star.seq.spec();
  const auto m = static_cast<long>(star.anchor.m);
  const auto n = static_cast<long>(star.anchor.n);
  const bool is_a = star.orientation == Orientation::A;

  rep.gcd_a = gcd_many(std::span<const Poly>(star.a));
  rep.gcd_b = gcd_many(std::span<const Poly>(star.b));

  if (kind == GfpKind::FibonacciType && m % 2 == 0 && n % 2 == 0) {
    const long k1 = n / 2;
    const long k2 = m / 2;
    const Integer cd = content(spec.d());
    rep.ratio_class = RatioClass::ScaledByBeta;
    rep.beta_u = is_a ? igcd3(cd, k1, k2) : igcd3(cd, k1 - 1, k2 - 1);
    rep.beta_v = is_a ? igcd3(cd, k1 - 1, k2 + 1) : igcd3(cd, k1, k2);
  } else if (kind == GfpKind::LucasType && m % 2 == 1 && n % 2 == 1) {
    const Integer c1 = content(spec.p1());
    rep.ratio_class = RatioClass::ScaledByBetaPrime;
    rep.beta_u = is_a ? igcd3(c1, n, m) : igcd3(c1, n - 2, m - 2);
    rep.beta_v = is_a ? igcd3(c1, n - 2, m + 2) : igcd3(c1, n, m);
  } else {
    rep.ratio_class = RatioClass::Equal;
  }
  rep.gcd_claim_holds = rep.gcd_a * rep.beta_u == rep.gcd_b * rep.beta_v;
}

StarReport base_report(const StarConfig& star) {
  StarReport rep;
  rep.family = star.seq.spec().family();
  rep.orientation = star.orientation;
  rep.anchor = star.anchor;
  return rep;
}

}  // namespace

StarReport verify_gcd_theorem(const StarConfig& star) {
  const GfpSpec& spec = star.seq.spec();
  if (!spec.theorem_grade()) throw Error(Errc::NotTheoremGrade, spec.family());
  if (star.seq.kind() == GfpKind::Other) throw Error(Errc::NotTyped, spec.family());
  StarReport rep = base_report(star);
  rep.product_equal = verify_product(star);
  classify_gcds(star, rep);
  return rep;
}

Part4Result verify_part4(const StarConfig& star) {
  const GfpKind kind = star.seq.kind();
  if (kind == GfpKind::Other) throw Error(Errc::NotTyped, star.seq.spec().family());
  Part4Result r;
  r.t = kind == GfpKind::LucasType ? 1 : 2;
  r.value = gcd(star.a[0], star.b[2]) * gcd(star.b[0], star.a[2]);
  const Poly& gt = star.seq[r.t];
  Poly candidate = star.c;
  for (unsigned e = 0; e <= 2; ++e) {
    if (canonical(candidate) == canonical(r.value)) {
      r.exponent = e;
      return r;
    }
    candidate *= gt;
  }
  throw Error(Errc::UnclassifiedPart4, anchor_label(star.orientation, star.anchor.m, star.anchor.n) +
                                           " value " + to_string(r.value) + " c " + to_string(star.c));
}

StarReport analyze_star(const StarConfig& star) {
  if (star.seq.kind() == GfpKind::Other) throw Error(Errc::NotTyped, star.seq.spec().family());
  StarReport rep = base_report(star);
  rep.product_equal = verify_product(star);
  classify_gcds(star, rep);
  rep.gcd_claim_asserted = star.seq.spec().theorem_grade();
  try {
    rep.part4 = verify_part4(star);
  } catch (const Error& e) {
    if (e.code() != Errc::UnclassifiedPart4) throw;
  }
  return rep;
}

std::vector<StarConfig> enumerate_stars(const Sequence& seq, const StarGrid& grid) {
  std::vector<StarConfig> out;
  auto sweep = [&](Orientation o) {
    const std::size_t m_min = o == Orientation::A ? 0 : 2;
    for (std::size_t m = m_min; m <= grid.m_max; ++m) {
      for (std::size_t n = 2; n <= grid.n_max; ++n) {
        if (o == Orientation::B && m == 2 && n == 2) continue;  // a2 = G_0 G_0
        out.push_back(make_star(seq, o, m, n));
      }
    }
  };
  if (grid.orientation_a) sweep(Orientation::A);
  if (grid.orientation_b) sweep(Orientation::B);
  return out;
}

// Corollaries ---------------------------------------------------------------

namespace {

using Hypothesis = std::function<bool(Orientation, long m, long n)>;

struct Corollary {
  std::string id;
  std::vector<std::string> families;
  Hypothesis holds;
  std::string note;
};

long mod(long a, long p) { return ((a % p) + p) % p; }

const std::vector<Corollary>& corollaries() {
  static const std::vector<Corollary> list = [] {
    std::vector<Corollary> v;
    v.push_back({"corollary6",
                 {"fibonacci", "lucas", "jacobsthal", "jacobsthal_lucas", "chebyshev1", "pell_lucas_prime",
                  "morgan_voyce_B", "morgan_voyce_C"},
                 [](Orientation, long, long) { return true; },
                 ""});
    v.push_back({"corollary7.1",
                 {"pell", "chebyshev2"},
                 [](Orientation, long m, long n) {
                   if (m % 2 != 0 || n % 2 != 0) return false;
                   const long k1 = n / 2;
                   const long k2 = m / 2;
                   return mod(k1 * k2, 4) != 0 && mod(k1 - k2, 2) != 0;
                 },
                 ""});
    // Part 2 carries no orientation and repeats the conditions of part 3,
    // which are orientation A conditions; B is governed by part 4.
    v.push_back({"corollary7.2",
                 {"fermat"},
                 [](Orientation o, long m, long n) {
                   if (o != Orientation::A || m % 2 != 0 || n % 2 != 0) return false;
                   const long k1 = n / 2;
                   const long k2 = m / 2;
                   return mod(k1 * k2, 9) != 0 && mod(k1 - 2 * k2, 3) != 0;
                 },
                 "applied to orientation A, where its conditions coincide with part 3"});
    v.push_back({"corollary7.3",
                 {"fermat"},
                 [](Orientation o, long m, long n) {
                   if (o != Orientation::A || m % 2 != 0 || n % 2 != 0) return false;
                   const long k1 = n / 2;
                   const long k2 = m / 2;
                   return mod(k1 * k2, 9) != 0 && mod(k1 - 2 * k2, 3) != 0;
                 },
                 ""});
    v.push_back({"corollary7.4",
                 {"fermat"},
                 [](Orientation o, long m, long n) {
                   if (o != Orientation::B || m % 2 != 0 || n % 2 != 0) return false;
                   const long k1 = n / 2;
                   const long k2 = m / 2;
                   return mod(k1 * k2, 9) != 0 && mod((k1 - 1) * (k2 - 1), 9) != 0;
                 },
                 ""});
    v.push_back({"corollary8.1",
                 {"fermat_lucas"},
                 [](Orientation o, long m, long n) {
                   return o == Orientation::A && mod(n * m, 9) != 0 && mod((n - 2) * (m + 2), 9) != 0;
                 },
                 ""});
    v.push_back({"corollary8.2",
                 {"fermat_lucas"},
                 [](Orientation o, long m, long n) {
                   return o == Orientation::B && mod(n * m, 9) != 0 && mod((n - 2) * (m - 2), 9) != 0;
                 },
                 ""});
    return v;
  }();
  return list;
}

}  // namespace

const std::vector<std::string>& corollary_families() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& c : corollaries()) {
      for (const auto& f : c.families) {
        if (std::find(v.begin(), v.end(), f) == v.end()) v.push_back(f);
      }
    }
    return v;
  }();
  return names;
}

std::vector<CorollaryResult> verify_corollaries(const Sequence& seq, const StarGrid& grid) {
  const std::string& family = seq.spec().family();
  const std::vector<StarConfig> stars = enumerate_stars(seq, grid);

  // gcd pairs are shared by every corollary on this family
  std::vector<std::pair<Poly, Poly>> gcds;
  gcds.reserve(stars.size());
  for (const auto& s : stars) {
    gcds.emplace_back(gcd_many(std::span<const Poly>(s.a)), gcd_many(std::span<const Poly>(s.b)));
  }

  std::vector<CorollaryResult> out;
  for (const auto& cor : corollaries()) {
    if (std::find(cor.families.begin(), cor.families.end(), family) == cor.families.end()) continue;
    CorollaryResult res;
    res.report = VerificationReport(cor.id);
    res.report.params = {{"family", family},
                         {"m_max", std::to_string(grid.m_max)},
                         {"n_max", std::to_string(grid.n_max)}};
    if (!cor.note.empty()) res.report.note(cor.note);
    for (std::size_t i = 0; i < stars.size(); ++i) {
      const auto& s = stars[i];
      const auto& [ga, gb] = gcds[i];
      const bool equal = ga == gb;
      if (cor.holds(s.orientation, static_cast<long>(s.anchor.m), static_cast<long>(s.anchor.n))) {
        res.report.record(equal, {anchor_label(s.orientation, s.anchor.m, s.anchor.n),
                                  {{"gcd_a", ga}, {"gcd_b", gb}}});
      } else {
        res.report.skip();
        if (!equal) res.differing_outside.emplace_back(s.orientation, s.anchor);
      }
    }
    if (res.differing_outside.empty()) {
      res.report.note("no anchor outside the hypotheses has differing gcds in this grid");
    } else {
      const auto& [o, p] = res.differing_outside.front();
      res.report.note("outside the hypotheses gcds differ at " + std::to_string(res.differing_outside.size()) +
                      " anchors, first " + anchor_label(o, p.m, p.n));
    }
    out.push_back(std::move(res));
  }
  if (out.empty()) throw Error(Errc::FamilyNotCovered, family);
  return out;
}

nlohmann::json to_json(const StarReport& r) {
  nlohmann::json j = {
      {"family", r.family},
      {"orientation", to_string(r.orientation)},
      {"anchor", {r.anchor.m, r.anchor.n}},
      {"product_equal", r.product_equal},
      {"gcd_a", to_string(r.gcd_a)},
      {"gcd_b", to_string(r.gcd_b)},
      {"ratio_class", to_string(r.ratio_class)},
      {"beta", {r.beta_u.get_si(), r.beta_v.get_si()}},
      {"gcd_claim_holds", r.gcd_claim_holds},
      {"gcd_claim_asserted", r.gcd_claim_asserted},
  };
  if (r.part4) {
    const char* cls[] = {"c", "c*G_t", "c*G_t^2"};
    j["part4"] = {{"class", cls[r.part4->exponent]}, {"t", r.part4->t}, {"value", to_string(r.part4->value)}};
  } else {
    j["part4"] = {{"class", "unclassified"}, {"t", nullptr}};
  }
  return j;
}

}  // namespace gfpoly

#include "cli.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gfpoly/error.hpp"
#include "gfpoly/gfp.hpp"
#include "gfpoly/gibonomial.hpp"
#include "gfpoly/hosoya.hpp"
#include "gfpoly/identities.hpp"
#include "gfpoly/numtriangles.hpp"
#include "gfpoly/poly.hpp"
#include "gfpoly/poly_checks.hpp"
#include "gfpoly/report.hpp"
#include "gfpoly/star.hpp"

namespace gfpoly::cli {
namespace {

using nlohmann::json;

constexpr std::uint64_t default_seed = 2017;
constexpr const char* rows_env = "GFPOLY_ROWS";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> resolve_families(const std::string& name) {
  if (name == "all") return builtin_family_names();
  (void)builtin_family(name);
  return {name};
}

Integer parse_integer(const std::string& text, const char* flag) {
  try {
    return Integer(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(std::string(flag) + ": not an integer: " + text);
  }
}

void print_report_line(std::ostream& out, const VerificationReport& r) {
  out << std::left << std::setw(8) << to_string(r.outcome) << r.theorem;
  for (const auto& [k, v] : r.params) out << "  " << k << '=' << v;
  out << "  checked=" << r.checked << "  skipped=" << r.skipped;
  if (r.failure_count) out << "  failures=" << r.failure_count;
  out << '\n';
  for (const auto& w : r.failures) {
    out << "    at " << w.where << ':';
    for (const auto& [label, value] : w.values) out << "  " << label << " = " << value;
    out << '\n';
  }
  for (const auto& n : r.notes) out << "    note: " << n << '\n';
}

// Prints reports in the requested format; returns the exit code.
int emit_reports(std::ostream& out, const std::vector<VerificationReport>& reports, bool as_json,
                 json extra = json::object()) {
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
  if (as_json) {
    json j = extra;
    j["passed"] = ok;
    j["reports"] = json::array();
    for (const auto& r : reports) j["reports"].push_back(to_json(r));
    out << j.dump(2) << '\n';
  } else {
    for (const auto& r : reports) print_report_line(out, r);
    if (extra.contains("skipped_families")) {
      for (const auto& s : extra["skipped_families"]) {
        out << "SKIP    " << s["family"].get<std::string>() << ": " << s["reason"].get<std::string>() << '\n';
      }
    }
    out << (ok ? "all checks passed" : "verification failed") << '\n';
  }
  return ok ? 0 : 1;
}

void add_format(CLI::App* cmd, std::string& target, std::vector<std::string> choices) {
  cmd->add_option("--format", target, "output format")->check(CLI::IsMember(std::move(choices)));
}

// Subcommands ----------------------------------------------------------------

int cmd_families(std::ostream& out, const std::string& format) {
  const auto& builtin = builtin_family_names();
  json arr = json::array();
  for (const auto& name : catalog_names()) {
    const GfpSpec s = builtin_family(name);
    arr.push_back({{"name", name},
                   {"p0", to_string(s.p0())},
                   {"p1", to_string(s.p1())},
                   {"d", to_string(s.d())},
                   {"g", to_string(s.g())},
                   {"type", to_string(classify(s).kind)},
                   {"theorem_grade", s.theorem_grade()},
                   {"builtin", std::find(builtin.begin(), builtin.end(), name) != builtin.end()}});
  }
  if (format == "json") {
    out << arr.dump(2) << '\n';
    return 0;
  }
  out << std::left << std::setw(18) << "name" << std::setw(6) << "p0" << std::setw(8) << "p1" << std::setw(10) << "d"
      << std::setw(6) << "g" << std::setw(16) << "type" << "theorem_grade\n";
  for (const auto& f : arr) {
    out << std::setw(18) << f["name"].get<std::string>() << std::setw(6) << f["p0"].get<std::string>()
        << std::setw(8) << f["p1"].get<std::string>() << std::setw(10) << f["d"].get<std::string>() << std::setw(6)
        << f["g"].get<std::string>() << std::setw(16) << f["type"].get<std::string>()
        << (f["theorem_grade"].get<bool>() ? "yes" : "no") << (f["builtin"].get<bool>() ? "" : "  (auxiliary)")
        << '\n';
  }
  return 0;
}

int cmd_seq(std::ostream& out, const std::string& family, std::size_t n, bool upto, const std::string& format) {
  Sequence seq(builtin_family(family));
  if (format == "json") {
    json j = {{"family", family}, {"n", n}};
    if (upto) {
      j["terms"] = json::array();
      for (std::size_t k = 0; k <= n; ++k) j["terms"].push_back(to_string(seq[k]));
    } else {
      j["value"] = to_string(seq[n]);
    }
    out << j.dump(2) << '\n';
    return 0;
  }
  if (upto) {
    for (std::size_t k = 0; k <= n; ++k) out << k << ' ' << seq[k] << '\n';
  } else {
    out << seq[n] << '\n';
  }
  return 0;
}

template <class Row>
void print_table(std::ostream& out, const std::vector<Row>& rows) {
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < row.size(); ++k) out << (k ? "  " : "") << row[k];
    out << '\n';
  }
}

int emit_triangle(std::ostream& out, const std::string& name, const PolyTriangle& rows,
                  const std::optional<std::string>& eval, const std::string& format) {
  std::optional<Integer> x0;
  if (eval) x0 = parse_integer(*eval, "--eval");
  if (format == "json") {
    out << triangle_json(name, rows, x0).dump(2) << '\n';
  } else if (format == "csv") {
    out << (x0 ? triangle_csv(evaluate(rows, *x0)) : triangle_csv(rows));
  } else if (x0) {
    print_table(out, evaluate(rows, *x0));
  } else {
    print_table(out, rows);
  }
  return 0;
}

PolyTriangle triangle_rows(const std::string& family, std::size_t rows, bool initial_only) {
  Sequence seq(builtin_family(family));
  return initial_only ? initial_triangle(seq, rows) : HosoyaTriangle::build(seq, rows).to_rows();
}

int cmd_export(std::ostream& out, const std::string& family, std::size_t rows, const std::string& x,
               const std::string& format, bool initial_only, long offset) {
  const Integer x0 = parse_integer(x, "--x");
  const PolyTriangle t = triangle_rows(family, rows, initial_only);
  if (format == "json") {
    out << triangle_json(family, t, x0).dump(2) << '\n';
  } else if (format == "csv") {
    out << triangle_csv(evaluate(t, x0));
  } else {
    out << export_bfile(flatten(evaluate(t, x0)), offset);
  }
  return 0;
}

struct StarOptions {
  std::string family = "all";
  std::string orientation = "both";
  std::size_t m_max = 12;
  std::size_t n_max = 12;
  bool corollaries = false;
  std::string format = "table";
};

json corollary_json(const CorollaryResult& c, std::size_t m_max, std::size_t n_max) {
  json j = to_json(c.report);
  j["differing_outside"] = json::array();
  for (const auto& [o, p] : c.differing_outside) {
    j["differing_outside"].push_back({{"orientation", to_string(o)}, {"anchor", {p.m, p.n}}});
  }
  if (c.differing_outside.empty()) {
    j["counterexample_note"] = "no counterexample <= " + std::to_string(std::max(m_max, n_max));
  }
  return j;
}

int cmd_verify_star(std::ostream& out, const StarOptions& o) {
  StarGrid grid{o.m_max, o.n_max, o.orientation != "b", o.orientation != "a"};
  bool ok = true;
  json stars = json::array();
  json cors = json::array();
  std::ostringstream table;

  for (const auto& family : resolve_families(o.family)) {
    Sequence seq(builtin_family(family));
    if (seq.kind() == GfpKind::Other) throw Error(Errc::NotTyped, family);
    std::size_t total[2] = {0, 0}, product_fail[2] = {0, 0}, gcd_fail[2] = {0, 0}, part4_missing[2] = {0, 0};
    std::vector<StarReport> bad;
    for (const auto& star : enumerate_stars(seq, grid)) {
      StarReport r = analyze_star(star);
      const int side = r.orientation == Orientation::A ? 0 : 1;
      ++total[side];
      if (!r.product_equal) ++product_fail[side];
      if (r.gcd_claim_asserted && !r.gcd_claim_holds) ++gcd_fail[side];
      if (!r.part4) ++part4_missing[side];
      if (!r.ok()) {
        ok = false;
        bad.push_back(r);
      }
      stars.push_back(to_json(r));
    }
    for (int side = 0; side < 2; ++side) {
      if (!total[side]) continue;
      table << std::left << std::setw(18) << family << (side == 0 ? "a" : "b") << "  stars=" << total[side]
            << "  product_fail=" << product_fail[side] << "  gcd_fail=" << gcd_fail[side]
            << "  part4_unclassified=" << part4_missing[side]
            << (seq.spec().theorem_grade() ? "" : "  (gcd claim not asserted: not theorem grade)") << '\n';
    }
    for (const auto& r : bad) table << "    FAIL " << to_json(r).dump() << '\n';

    const auto& covered = corollary_families();
    if (o.corollaries && std::find(covered.begin(), covered.end(), family) != covered.end()) {
      for (const auto& c : verify_corollaries(seq, grid)) {
        if (!c.report.passed()) ok = false;
        cors.push_back(corollary_json(c, o.m_max, o.n_max));
        print_report_line(table, c.report);
        if (c.differing_outside.empty()) {
          table << "    no counterexample <= " << std::max(o.m_max, o.n_max) << '\n';
        } else {
          const auto& [orient, p] = c.differing_outside.front();
          table << "    gcds differ outside the hypotheses at " << c.differing_outside.size()
                << " anchors, first: " << to_string(orient) << " (" << p.m << ',' << p.n << ")\n";
        }
      }
    }
  }

  if (o.format == "json") {
    json j = {{"passed", ok}, {"stars", stars}};
    if (o.corollaries) j["corollaries"] = cors;
    out << j.dump(2) << '\n';
  } else {
    out << table.str() << (ok ? "all checks passed" : "verification failed") << '\n';
  }
  return ok ? 0 : 1;
}

int cmd_verify_gibonomial_star(std::ostream& out, std::size_t n_max, bool as_json) {
  std::vector<VerificationReport> reports;
  for (std::size_t n = 2; n <= n_max; ++n) {
    for (std::size_t r = 1; r < n; ++r) reports.push_back(verify_gibonomial_star(n, r));
  }
  return emit_reports(out, reports, as_json);
}

struct IdentityOptions {
  std::string kind;
  std::string family = "all";
  std::optional<std::size_t> n_max;
  std::size_t trials = 500;
  std::uint64_t seed = default_seed;
  std::size_t i_max = 4;
  std::string format = "table";
};

int cmd_verify_identity(std::ostream& out, const IdentityOptions& o) {
  std::vector<VerificationReport> reports;
  json skipped = json::array();
  auto n_or = [&](std::size_t fallback) { return o.n_max.value_or(fallback); };

  if (o.kind == "derivative") {
    reports.push_back(verify_derivative_identity(n_or(20)));
  } else if (o.kind == "integral") {
    reports.push_back(verify_integral_prop(n_or(20)));
  } else {
    const bool explicit_family = o.family != "all";
    for (const auto& family : resolve_families(o.family)) {
      Sequence seq(builtin_family(family));
      const bool fib = seq.kind() == GfpKind::FibonacciType;
      if (o.kind == "johnson") {
        reports.push_back(verify_johnson(seq, random_johnson_samples(o.trials, n_or(30), o.seed)));
      } else if (o.kind == "cassini" || o.kind == "catalan") {
        reports.push_back(verify_catalan_cassini(seq, n_or(20)));
      } else if (o.kind == "parallels") {
        reports.push_back(verify_parallels_lemma(seq, o.i_max, n_or(12)).report);
      } else if (!fib && !explicit_family) {
        skipped.push_back({{"family", family}, {"reason", "not Fibonacci type"}});
      } else if (o.kind == "sums") {
        reports.push_back(verify_sums_theorem(seq, n_or(10)));
      } else {  // closed-sums
        reports.push_back(verify_closed_sums(seq, n_or(10), ClosedSumPart::Weighted));
        if (seq.spec().g() == Poly(1)) {
          reports.push_back(verify_closed_sums(seq, n_or(10), ClosedSumPart::UnitG));
        } else if (!explicit_family) {
          skipped.push_back({{"family", family}, {"reason", "unit-g part needs g = 1"}});
        }
      }
    }
  }
  json extra = json::object();
  if (!skipped.empty()) extra["skipped_families"] = skipped;
  return emit_reports(out, reports, o.format == "json", extra);
}

// Runs `check` on each family; with "all", families the check rejects for a
// precondition are listed as skipped instead of aborting the run.
int verify_per_family(std::ostream& out, const std::string& family_arg, bool as_json,
                      const std::function<std::vector<VerificationReport>(const Sequence&)>& check) {
  std::vector<VerificationReport> reports;
  json skipped = json::array();
  for (const auto& family : resolve_families(family_arg)) {
    Sequence seq(builtin_family(family));
    try {
      for (auto& r : check(seq)) reports.push_back(std::move(r));
    } catch (const Error& e) {
      if (family_arg != "all") throw;
      skipped.push_back({{"family", family}, {"reason", to_string(e.code())}});
    }
  }
  json extra = json::object();
  if (!skipped.empty()) extra["skipped_families"] = skipped;
  return emit_reports(out, reports, as_json, extra);
}

struct Lemma1Options {
  std::vector<std::string> polys;
  std::size_t trials = 200;
  std::uint64_t seed = default_seed;
  std::string format = "table";
};

int cmd_verify_lemma1(std::ostream& out, const Lemma1Options& o) {
  std::vector<VerificationReport> reports;
  if (!o.polys.empty()) {
    if (o.polys.size() != 4) throw UsageError("lemma1: give all of --p --q --r --s or none");
    std::vector<Poly> v;
    for (const auto& s : o.polys) v.push_back(parse_poly(s));
    reports.push_back(verify_gcd_multiplicativity(v[0], v[1], v[2], v[3]));
  } else {
    std::mt19937_64 rng(o.seed);
    VerificationReport all("lemma1");
    all.params = {{"trials", std::to_string(o.trials)}, {"seed", std::to_string(o.seed)}};
    for (std::size_t i = 0; i < o.trials; ++i) {
      const auto [p, q, r, s] = random_lemma1_instance(rng);
      VerificationReport one = verify_gcd_multiplicativity(p, q, r, s);
      all.checked += one.checked;
      all.skipped += one.skipped;
      for (const auto& w : one.failures) all.record(false, w);
      if (one.outcome == Outcome::Pass && all.outcome == Outcome::Vacuous) all.outcome = Outcome::Pass;
    }
    reports.push_back(std::move(all));
  }
  return emit_reports(out, reports, o.format == "json");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Fibonacci polynomials, Hosoya triangles and their gcd properties", "gfpoly"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "expand all help");

  std::string format = "table";
  std::function<int()> action;

  // families
  auto* families = app.add_subcommand("families", "list the family catalog");
  add_format(families, format, {"table", "json"});
  families->callback([&] { action = [&] { return cmd_families(out, format); }; });

  // seq
  std::string family;
  std::size_t n = 0;
  bool upto = false;
  auto* seq = app.add_subcommand("seq", "print the n-th term of a family");
  seq->add_option("--family", family, "family name")->required();
  seq->add_option("--n", n, "index")->required();
  seq->add_flag("--upto", upto, "print every term from 0 to n");
  add_format(seq, format, {"table", "json"});
  seq->callback([&] { action = [&] { return cmd_seq(out, family, n, upto, format); }; });

  // triangle
  std::size_t rows = 6;
  std::optional<std::string> eval;
  bool initial_only = false;
  auto* triangle = app.add_subcommand("triangle", "Hosoya polynomial triangle, rows 0..N");
  triangle->add_option("--family", family, "family name")->required();
  triangle->add_option("--rows", rows, "last row index (nonzero row count with --initial-only)")->envname(rows_env);
  triangle->add_option("--eval", eval, "evaluate entries at this integer");
  triangle->add_flag("--initial-only", initial_only, "only entries without a G_0 factor");
  add_format(triangle, format, {"table", "json", "csv"});
  triangle->callback([&] {
    action = [&] { return emit_triangle(out, family, triangle_rows(family, rows, initial_only), eval, format); };
  });

  // gibonomial
  std::size_t gib_rows = 5;
  auto* gib = app.add_subcommand("gibonomial", "gibonomial triangle, rows 0..N");
  gib->add_option("--rows", gib_rows, "last row index")->envname(rows_env);
  gib->add_option("--eval", eval, "evaluate entries at this integer");
  add_format(gib, format, {"table", "json", "csv"});
  gib->callback([&] {
    action = [&] { return emit_triangle(out, "gibonomial", gibonomial_triangle(gib_rows), eval, format); };
  });

  // export
  std::string x = "1";
  long offset = 1;
  std::string export_format = "bfile";
  auto* exp = app.add_subcommand("export", "numeric triangle export");
  exp->add_option("--family", family, "family name")->required();
  exp->add_option("--rows", rows, "last row index (nonzero row count with --initial-only)")->envname(rows_env);
  exp->add_option("--x", x, "evaluation point");
  exp->add_flag("--initial-only", initial_only, "only entries without a G_0 factor");
  exp->add_option("--offset", offset, "first b-file index");
  add_format(exp, export_format, {"bfile", "json", "csv"});
  exp->callback([&] {
    action = [&] { return cmd_export(out, family, rows, x, export_format, initial_only, offset); };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification sweep");
  verify->require_subcommand(1);

  StarOptions star;
  auto* vstar = verify->add_subcommand("star", "star of David gcd property on Hosoya triangles");
  vstar->add_option("--family", star.family, "family name or all");
  vstar->add_option("--orientation", star.orientation)->check(CLI::IsMember({"a", "b", "both"}));
  vstar->add_option("--m-max", star.m_max);
  vstar->add_option("--n-max", star.n_max);
  vstar->add_flag("--corollaries", star.corollaries, "also run the equal-gcd corollaries");
  add_format(vstar, star.format, {"table", "json"});
  vstar->callback([&] { action = [&] { return cmd_verify_star(out, star); }; });

  std::size_t gib_n_max = 12;
  auto* vgib = verify->add_subcommand("gibonomial-star", "star of David on the gibonomial triangle");
  vgib->add_option("--n-max", gib_n_max);
  add_format(vgib, format, {"table", "json"});
  vgib->callback([&] { action = [&] { return cmd_verify_gibonomial_star(out, gib_n_max, format == "json"); }; });

  IdentityOptions ident;
  auto* vid = verify->add_subcommand("identity", "determinant and sum identities");
  vid->add_option("kind", ident.kind)
      ->required()
      ->check(CLI::IsMember(
          {"johnson", "cassini", "catalan", "sums", "closed-sums", "derivative", "integral", "parallels"}));
  vid->add_option("--family", ident.family, "family name or all");
  vid->add_option("--n-max", ident.n_max, "index bound (default depends on the identity)");
  vid->add_option("--trials", ident.trials, "random instances per family (johnson)");
  vid->add_option("--seed", ident.seed, "RNG seed")->capture_default_str();
  vid->add_option("--i-max", ident.i_max, "shift bound (parallels)");
  add_format(vid, ident.format, {"table", "json"});
  vid->callback([&] { action = [&] { return cmd_verify_identity(out, ident); }; });

  std::string vfamily = "all";
  std::deque<std::size_t> bounds;  // one per subcommand, stable addresses
  auto per_family = [&](const char* name, const char* help, const char* bound_flag, std::size_t bound_default,
                        std::function<std::vector<VerificationReport>(const Sequence&, std::size_t)> check) {
    auto* cmd = verify->add_subcommand(name, help);
    std::size_t* bound = &bounds.emplace_back(bound_default);
    cmd->add_option("--family", vfamily, "family name or all");
    cmd->add_option(bound_flag, *bound)->capture_default_str();
    add_format(cmd, format, {"table", "json"});
    cmd->callback([&, bound, check] {
      action = [&out, &vfamily, &format, bound, check] {
        return verify_per_family(out, vfamily, format == "json",
                                 [&](const Sequence& s) { return check(s, *bound); });
      };
    });
  };
  per_family("gcd-distance", "gcd of terms at a given index distance", "--n-max", 20,
             [](const Sequence& s, std::size_t b) { return std::vector{verify_gcd_distance(s, b)}; });
  per_family("binet", "recurrence against the Binet form", "--n-max", 50,
             [](const Sequence& s, std::size_t b) { return std::vector{verify_binet_equivalence(s, b)}; });
  per_family("double-recursion", "double recursion and rectangle property", "--rows", 12,
             [](const Sequence& s, std::size_t b) {
               const HosoyaTriangle t = HosoyaTriangle::build(s, b);
               return std::vector{verify_double_recursion(t), verify_rectangle_property(t)};
             });
  per_family("mod-d2", "closed form modulo d^2", "--m-max", 30,
             [](const Sequence& s, std::size_t b) { return std::vector{verify_mod_d_squared(s, b)}; });

  Lemma1Options lemma;
  std::string p, q, r, s;
  auto* vlemma = verify->add_subcommand("lemma1", "gcd multiplicativity over Z[x]");
  auto* op = vlemma->add_option("--p", p);
  auto* oq = vlemma->add_option("--q", q);
  auto* or_ = vlemma->add_option("--r", r);
  auto* os = vlemma->add_option("--s", s);
  vlemma->add_option("--trials", lemma.trials, "random instances when no polynomials are given");
  vlemma->add_option("--seed", lemma.seed, "RNG seed");
  add_format(vlemma, lemma.format, {"table", "json"});
  vlemma->callback([&] {
    for (auto* o : {op, oq, or_, os}) {
      if (o->count()) lemma.polys.push_back(o->as<std::string>());
    }
    action = [&] { return cmd_verify_lemma1(out, lemma); };
  });

  std::vector<std::string> argv_rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(argv_rest.begin(), argv_rest.end());
  try {
    app.parse(argv_rest);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    return action ? action() : 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  }
  return 2;
}

}  // namespace gfpoly::cli

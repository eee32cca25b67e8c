#include "gfpoly/numtriangles.hpp"

#include "gfpoly/error.hpp"

namespace gfpoly {

IntTriangle evaluate(const PolyTriangle& t, const Integer& x0) {
  IntTriangle out;
  out.reserve(t.size());
  for (const auto& row : t) {
    std::vector<Integer> vals;
    vals.reserve(row.size());
    for (const auto& p : row) vals.push_back(eval_at(p, x0));
    out.push_back(std::move(vals));
  }
  return out;
}

IntTriangle numeric_triangle(std::string_view family, std::size_t max_row, const Integer& x0) {
  const Sequence seq(builtin_family(family));
  return evaluate(HosoyaTriangle::build(seq, max_row).to_rows(), x0);
}

std::vector<unsigned> coefficient_gcd_exponents(std::string_view family, std::size_t max_n) {
  unsigned long prime = 0;
  std::size_t stride = 1;
  if (family == "fermat" || family == "fermat_lucas") {
    prime = 3;
  } else if (family == "pell") {
    prime = 2;
    stride = 2;
  } else if (family == "chebyshev2") {
    prime = 2;
  } else {
    throw Error(Errc::FamilyNotCovered, std::string(family) + " has no coefficient-gcd pattern");
  }
  const Sequence seq(builtin_family(family));
  std::vector<unsigned> out;
  out.reserve(max_n);
  for (std::size_t n = 1; n <= max_n; ++n) {
    Integer c = content(seq[stride * n]);
    unsigned e = 0;
    while (c != 0 && mpz_divisible_ui_p(c.get_mpz_t(), prime)) {
      mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), prime);
      ++e;
    }
    if (c != 1) {
      throw Error(Errc::NotAPurePower, std::string(family) + " index " + std::to_string(stride * n) +
                                           ": content is not a power of " + std::to_string(prime));
    }
    out.push_back(e);
  }
  return out;
}

std::vector<Integer> flatten(const IntTriangle& t) {
  std::vector<Integer> out;
  for (const auto& row : t) out.insert(out.end(), row.begin(), row.end());
  return out;
}

std::string export_bfile(const std::vector<Integer>& sequence, long offset) {
  std::string out;
  long i = offset;
  for (const auto& v : sequence) {
    out += std::to_string(i++);
    out += ' ';
    out += v.get_str();
    out += '\n';
  }
  return out;
}

namespace {

// Values beyond 64 bits are emitted as decimal strings.
nlohmann::json json_integer(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

}  // namespace

nlohmann::json triangle_json(std::string_view family, const PolyTriangle& rows, std::optional<Integer> eval_point) {
  nlohmann::json jrows = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& p : row) r.push_back(to_string(p));
    jrows.push_back(std::move(r));
  }
  nlohmann::json j = {{"family", family}, {"rows", jrows}};
  if (eval_point) {
    j["eval_point"] = json_integer(*eval_point);
    nlohmann::json vals = nlohmann::json::array();
    for (const auto& row : evaluate(rows, *eval_point)) {
      nlohmann::json r = nlohmann::json::array();
      for (const auto& v : row) r.push_back(json_integer(v));
      vals.push_back(std::move(r));
    }
    j["values"] = std::move(vals);
  }
  return j;
}

std::string triangle_csv(const PolyTriangle& rows) {
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) out += ',';
      out += to_string(row[k]);
    }
    out += '\n';
  }
  return out;
}

std::string triangle_csv(const IntTriangle& rows) {
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) out += ',';
      out += row[k].get_str();
    }
    out += '\n';
  }
  return out;
}

}  // namespace gfpoly

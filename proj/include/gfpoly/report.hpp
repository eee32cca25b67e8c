#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gfpoly/poly.hpp"

namespace gfpoly {

enum class Outcome { Pass, Fail, Vacuous };

std::string to_string(Outcome o);

/// One concrete instance that broke an identity, with the polynomials that
/// show it.
struct Witness {
  std::string where;  // e.g. "n=7" or "orientation=A m=4 n=6"
  std::vector<std::pair<std::string, Poly>> values;
};

/// Structured pass/fail record for one theorem instance or sweep. A report
/// starts Vacuous and becomes Pass on the first checked instance; any failure
/// makes it Fail permanently.
struct VerificationReport {
  std::string theorem;
  std::map<std::string, std::string> params;
  Outcome outcome = Outcome::Vacuous;
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::vector<Witness> failures;
  std::vector<std::string> notes;

  VerificationReport() = default;
  explicit VerificationReport(std::string id) : theorem(std::move(id)) {}

  bool passed() const { return outcome != Outcome::Fail; }

  /// Records one checked instance; `ok == false` stores the witness. Only the
  /// first `max_witnesses` failures keep their polynomials.
  void record(bool ok, Witness witness = {});
  void skip(std::size_t n = 1) { skipped += n; }
  void note(std::string text) { notes.push_back(std::move(text)); }
  /// Folds another report's counts, failures and notes into this one.
  void merge(const VerificationReport& other);

  static constexpr std::size_t max_witnesses = 16;
  std::size_t failure_count = 0;
};

nlohmann::json to_json(const VerificationReport& r);

}  // namespace gfpoly

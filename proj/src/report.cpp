#include "gfpoly/report.hpp"

namespace gfpoly {

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "PASS";
    case Outcome::Fail: return "FAIL";
    case Outcome::Vacuous: return "VACUOUS";
  }
  return "?";
}

void VerificationReport::record(bool ok, Witness witness) {
  ++checked;
  if (ok) {
    if (outcome == Outcome::Vacuous) outcome = Outcome::Pass;
    return;
  }
  outcome = Outcome::Fail;
  ++failure_count;
  if (failures.size() < max_witnesses) failures.push_back(std::move(witness));
}

void VerificationReport::merge(const VerificationReport& other) {
  checked += other.checked;
  skipped += other.skipped;
  failure_count += other.failure_count;
  for (const auto& w : other.failures) {
    if (failures.size() < max_witnesses) failures.push_back(w);
  }
  for (const auto& n : other.notes) notes.push_back(n);
  if (other.outcome == Outcome::Fail) {
    outcome = Outcome::Fail;
  } else if (other.outcome == Outcome::Pass && outcome == Outcome::Vacuous) {
    outcome = Outcome::Pass;
  }
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& w : r.failures) {
    nlohmann::json values = nlohmann::json::object();
    for (const auto& [name, p] : w.values) values[name] = to_string(p);
    failures.push_back({{"where", w.where}, {"values", values}});
  }
  return {
      {"theorem", r.theorem},
      {"params", r.params},
      {"outcome", to_string(r.outcome)},
      {"checked", r.checked},
      {"skipped", r.skipped},
      {"failure_count", r.failure_count},
      {"failures", failures},
      {"notes", r.notes},
  };
}

}  // namespace gfpoly

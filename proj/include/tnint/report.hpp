/**
 * @brief Three-valued check reports with concrete witnesses.
 */
#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include <json.hpp>

namespace tnint {

using json = nlohmann::ordered_json;

enum class Verdict { pass, fail, inconclusive };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

/// Outcome of one named check. `witness` is filled on failure; `detail`
/// carries check-specific extras (e.g. a continuity modulus).
struct Check {
  std::string name;
  Verdict verdict = Verdict::inconclusive;
  std::size_t samples = 0;
  std::size_t failures = 0;
  json witness;
  json detail;
};

struct Report {
  std::string subject;
  std::vector<Check> checks;

  /// True iff every check passed. Inconclusive counts as not passed.
  bool passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const Check& c) { return c.verdict == Verdict::pass; });
  }

  const Check* find(std::string_view name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }

  Verdict verdict(std::string_view name) const {
    const Check* c = find(name);
    return c ? c->verdict : Verdict::inconclusive;
  }

  /// Appends the checks of `other`, prefixing their names.
  void absorb(const Report& other, const std::string& prefix = {}) {
    for (auto c : other.checks) {
      c.name = prefix + c.name;
      checks.push_back(std::move(c));
    }
  }
};

/// Running tally for a sampled check.
class CheckBuilder {
 public:
  explicit CheckBuilder(std::string name) { check_.name = std::move(name); }

  void ok() { ++check_.samples; }
  void violation(json witness) {
    ++check_.samples;
    if (check_.failures++ == 0) check_.witness = std::move(witness);
  }
  void record(bool holds, const auto& make_witness) {
    if (holds) ok();
    else violation(make_witness());
  }
  Check& raw() { return check_; }

  Check finish() {
    if (check_.failures > 0) check_.verdict = Verdict::fail;
    else if (check_.samples > 0) check_.verdict = Verdict::pass;
    else check_.verdict = Verdict::inconclusive;
    return std::move(check_);
  }

 private:
  Check check_;
};

inline json to_json(const Check& c) {
  json j;
  j["name"] = c.name;
  j["verdict"] = to_string(c.verdict);
  j["samples"] = c.samples;
  j["failures"] = c.failures;
  if (!c.witness.is_null()) j["witness"] = c.witness;
  if (!c.detail.is_null()) j["detail"] = c.detail;
  return j;
}

inline json to_json(const Report& r) {
  json j;
  j["subject"] = r.subject;
  j["passed"] = r.passed();
  j["checks"] = json::array();
  for (const auto& c : r.checks) j["checks"].push_back(to_json(c));
  return j;
}

}  // namespace tnint

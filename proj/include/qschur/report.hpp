/*
  Structured pass/fail records for the verification suites.  Reports
  hold deterministic check lists suitable for golden-file comparison.
*/
#pragma once

#include <string>
#include <vector>

namespace qschur {

struct CheckResult {
  std::string id;       // stable check identifier, e.g. "dj.central_u"
  std::string params;   // human-readable parameter string
  bool pass = false;
  std::string details;  // witness dimensions, counterexample, ...
};

struct Report {
  std::vector<CheckResult> checks;

  void add(const std::string& id, const std::string& params, bool pass,
           const std::string& details = "") {
    checks.push_back({id, params, pass, details});
  }
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  size_t failures() const {
    size_t n = 0;
    for (const auto& c : checks) n += !c.pass;
    return n;
  }
};

}  // namespace qschur

#pragma once

// Pass/fail reporting for the structure-identity batteries.

#include <string>
#include <utility>
#include <vector>

namespace hopfdual {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string witness;
};

struct CheckReport {
  std::string subject;
  std::vector<CheckResult> results;

  bool all_pass() const {
    for (const auto& r : results)
      if (!r.pass) return false;
    return true;
  }
  void add(std::string name, bool ok, std::string witness = "") {
    results.push_back({std::move(name), ok, ok ? "" : std::move(witness)});
  }
};

}  // namespace hopfdual

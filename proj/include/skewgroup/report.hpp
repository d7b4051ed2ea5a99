#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "skewgroup/numeric.hpp"

namespace skewgroup {

/// One machine-checkable claim. A failed check always carries at least one
/// dimension or residual as its witness.
struct Check {
  std::string name;
  bool pass = true;
  std::vector<std::pair<std::string, long long>> dims;
  std::vector<std::pair<std::string, double>> residuals;
  std::string note;

  Check& dim(std::string key, long long value) {
    dims.emplace_back(std::move(key), value);
    return *this;
  }
  Check& residual(std::string key, double value) {
    residuals.emplace_back(std::move(key), value);
    return *this;
  }
  Check& with_note(std::string text) {
    note = std::move(text);
    return *this;
  }
};

struct VerificationReport {
  std::string instance;
  std::string task;
  std::vector<Check> checks;
  std::uint64_t seed = kDefaultSeed;
  double tol = kDefaultTol;
  /// Set when the task aborted with a library error.
  std::string error;

  bool passed() const {
    if (!error.empty()) return false;
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  Check& add(std::string name, bool pass) {
    checks.push_back(Check{std::move(name), pass, {}, {}, {}});
    return checks.back();
  }

  /// Append another report's checks under `prefix/`.
  void absorb(const VerificationReport& other, const std::string& prefix) {
    for (auto c : other.checks) {
      c.name = prefix + "/" + c.name;
      checks.push_back(std::move(c));
    }
    if (!other.error.empty() && error.empty()) error = prefix + ": " + other.error;
  }
};

}  // namespace skewgroup

#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace qkring {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Ordered list of named pass/fail checks produced by the verification suites.
struct Report {
  std::string title;
  std::vector<CheckResult> checks;

  void add(std::string name, bool passed, std::string detail = {}) {
    checks.push_back({std::move(name), passed, std::move(detail)});
  }
  void append(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  }
  std::size_t failures() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
  }
};

}  // namespace qkring

#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "constel/hankel.hpp"

namespace constel {

struct VerifyOptions {
  int p_min = 2;
  int p_max = 4;
  int n_max = 3;
  int order = 10;
  /// Worker threads; never changes the report.
  unsigned threads = 1;
  /// Test hook applied to every Hankel matrix before its determinant is
  /// taken, used to show that a corrupted entry is caught.
  std::function<void(const HankelSpec&, PolyMatrix&)> tamper;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string witness;  // first counterexample when !passed
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool all_passed() const;
  std::size_t failures() const;
};

/// Runs the identity suites of every module over the configured range.
VerifyReport verify_all(const VerifyOptions& options);

void print_report(const VerifyReport& report, std::ostream& out);

}  // namespace constel

#pragma once

#include <string>
#include <vector>

#include "schroder/partition.hpp"

namespace schroder {

struct PropertyResult {
  std::string name;
  int n_min = 0;
  int n_max = 0;
  bool passed = true;
  /// Smallest failing n, first counterexample in generation order.
  int failing_n = -1;
  std::string counterexample;
};

struct VerifyReport {
  std::vector<PropertyResult> results;
  bool ok() const;
};

/// Runs every cross-module identity for sizes up to max_n (paths of
/// semilength <= max_n, partitions of [n+1]; single-module partition checks
/// go up to [max_n+1]). Results are in a fixed order.
VerifyReport run_verification(int max_n, int limit = kDefaultExhaustiveLimit);

/// One line per property: "PASS name n=a..b" or "FAIL name n=k: ...".
std::string format_report(const VerifyReport& report);

}  // namespace schroder

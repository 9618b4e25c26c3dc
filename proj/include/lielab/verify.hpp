#pragma once

#include <string>
#include <vector>

#include "lielab/io.hpp"

namespace lielab {

enum class CheckStatus { Pass, Fail, Skip };

const char* to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  std::string anchor;  // the statement being instantiated
  CheckStatus status = CheckStatus::Skip;
  std::string detail;  // the concrete mismatch for failures
  double seconds = 0;
};

struct SuiteResult {
  std::vector<CheckResult> checks;

  bool all_pass() const;
  int count(CheckStatus s) const;
};

/// Runs the named instance checks in a fixed order.
SuiteResult run_verify(const Budget& budget = {});

/// Canonical report; elapsed times are left out so runs compare equal.
json suite_json(const SuiteResult& r);

}  // namespace lielab

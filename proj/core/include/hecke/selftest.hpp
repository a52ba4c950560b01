#pragma once

#include <string>
#include <vector>

namespace hecke {

struct SelfTestResult {
  struct Suite {
    std::string name;
    bool passed = false;
    std::string detail;  // first failure, when any
  };
  std::vector<Suite> suites;
  bool all_passed() const;
};

/// Available suite names, in run order.
std::vector<std::string> selftest_suites();

/// Runs the named oracle-equivalence and invariant suites ("all" or an empty
/// selection given to the CLI means every suite). Unknown names throw.
SelfTestResult run_selftest(const std::vector<std::string>& suites);

}  // namespace hecke

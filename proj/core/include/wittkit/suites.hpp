#pragma once

#include "wittkit/numtheory.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace wittkit {

struct SuiteConfig {
  long long trials = 0;  // 0 selects the per-suite default
  std::uint64_t seed = 1;
  int max_set_size = 3;
  std::vector<Int> coeff_pool;  // empty selects the default pool
  bool exhaustive = false;
};

struct SuiteFailure {
  long long trial = 0;
  std::string input;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  long long attempted = 0;
  std::vector<SuiteFailure> failures;
  std::map<std::string, std::string> notes;  // e.g. the determined trace-form sign
  double elapsed_seconds = 0.0;
  SuiteConfig config;

  bool passed() const { return failures.empty(); }
};

// Registered suite names, in execution order of "all" ("all" runs the rest).
const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

// Runs the named property suite with reproducible randomness.  Throws
// std::invalid_argument for unknown names.
SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg);

// Infrastructure checks (Hilbert product formula, gw_equal congruence,
// hyperbolic-padding invariance); kept outside the named registry.
SuiteReport run_infra_checks(const SuiteConfig& cfg);

// Deterministic JSON: identical seed and flags give identical bytes, so the
// wall clock is reported only by the human summary.
std::string report_to_json(const SuiteReport& report);
std::string report_summary(const SuiteReport& report);

}  // namespace wittkit

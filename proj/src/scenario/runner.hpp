#pragma once

#include "scenario/scenario.hpp"

namespace hca {

struct Verdict {
  std::string name;
  std::string kind;   // "pass", "fail" or "value"
  std::string value;  // quantitative payload, always a string
};

/// Machine-readable outcome of one run. Exit codes: 0 success, 1 config
/// error, 2 numerical failure, 3 invariant violation detected by a check.
/// Wall time is diagnostics only and never serialized, so identical
/// scenarios produce byte-identical reports.
struct RunReport {
  std::string command;
  int exit_code = 0;
  std::vector<Verdict> verdicts;
  std::vector<std::string> artifacts;  // file names inside the output dir
  Json scenario_echo;
  std::string error;
  double wall_seconds = 0.0;

  Json to_json() const;
};

RunReport run_scenario(const Scenario& s);

/// Loads, applies overrides, runs, writes <output_dir>/report.json.
RunReport run_scenario_file(const std::string& path,
                            const std::string& output_dir_override,
                            std::optional<std::uint64_t> seed_override);

struct SuiteConfig {
  std::uint64_t seed = 42;
  long long trials = 100;
  std::vector<int> dims = {1, 2, 3, 4};
  long long entry_bound = 3;
  long long steps = 200;
  int degree = 2;
  long long leibniz_pairs = 10;
};

struct SuiteCheckStat {
  long long runs = 0;
  long long failures = 0;
  std::string first_failure;
};

/// Aggregated result of the randomized verification suite. Checks appear
/// in a fixed order so serialized results are reproducible.
struct SuiteResult {
  SuiteConfig config;
  std::vector<std::pair<std::string, SuiteCheckStat>> checks;

  SuiteCheckStat& stat(const std::string& name);
  bool all_passed() const;
  Json to_json() const;
};

/// Deterministically generates `trials` random integer systems and drives
/// every exact check over each: staggered-invariant conservation for the
/// commutant family, bit-exact reversibility, stationarity of all interior
/// unit variations, agreement of the two action forms, the staggered
/// Leibniz identity, and tamper detection on a perturbed trajectory.
SuiteResult randomized_suite(const SuiteConfig& config);

RunReport run_suite_command(const SuiteConfig& config,
                            const std::string& output_dir);

int exit_code_for(const Error& e);

}  // namespace hca

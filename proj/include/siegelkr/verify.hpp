#pragma once

#include <string>
#include <vector>

namespace skr {

// Named verification suites: each runs an exhaustive (or, where stated,
// sampled) check of one combinatorial statement at a given rank and
// reports pass/fail with counterexample payloads.
struct SuiteResult {
  std::string suite;
  int g = 0;
  bool pass = false;
  long long checked = 0;            // number of cases examined
  std::vector<std::string> notes;   // informational payloads
  std::vector<std::string> failures;
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
int suite_default_g(const std::string& name);

SuiteResult run_suite(const std::string& name, int g);

std::string suite_report_json(const SuiteResult& result);

}  // namespace skr

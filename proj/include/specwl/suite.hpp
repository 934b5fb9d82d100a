#pragma once
#include <cstdint>
#include <string>
#include <vector>

namespace specwl {

struct SuiteCase {
  std::string id;
  std::string claim;     // property or oracle the case checks
  std::string inputs;    // corpus description
  std::string expected;
  std::string observed;
  bool pass = false;
  double runtime_ms = 0.0;
};

struct SuiteReport {
  std::vector<SuiteCase> cases;  // ordered by family then case id
  int passed = 0;
  int failed = 0;
};

// Case-id glob with * and ?; a bare family id like "A4" selects the family.
bool suite_filter_match(const std::string& pattern, const std::string& id);
std::vector<std::string> suite_case_ids();

// Runs the acceptance catalog, filtered; cases run concurrently up to jobs
// and are merged by case id. Deterministic for a fixed build and seed.
SuiteReport run_suite(const std::string& filter = "", int jobs = 1,
                      uint64_t seed = 0x5eedULL);

}  // namespace specwl

// Runs the full acceptance catalog and prints one verdict line per criterion.
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "specwl/suite.hpp"

int main(int argc, char** argv) {
  int jobs = argc > 1 ? std::atoi(argv[1]) : 4;
  specwl::SuiteReport rep = specwl::run_suite("", jobs);

  std::map<int, std::vector<const specwl::SuiteCase*>> families;
  for (const auto& c : rep.cases) {
    auto dot = c.id.find('.');
    int num = std::atoi(c.id.substr(1, dot - 1).c_str());
    families[num].push_back(&c);
  }

  int failed_criteria = 0;
  for (const auto& [num, cases] : families) {
    int pass = 0;
    double ms = 0.0;
    for (const auto* c : cases) {
      pass += c->pass ? 1 : 0;
      ms += c->runtime_ms;
    }
    bool ok = pass == (int)cases.size();
    if (!ok) failed_criteria++;
    std::printf("A%-2d %s  (%d/%zu cases, %.0f ms)\n", num, ok ? "PASS" : "FAIL",
                pass, cases.size(), ms);
    for (const auto* c : cases)
      if (!c->pass) std::printf("    %s: %s\n", c->id.c_str(), c->observed.c_str());
  }
  std::printf("%d/%zu criteria passed\n", (int)families.size() - failed_criteria,
              families.size());
  return failed_criteria == 0 ? 0 : 1;
}

#include <cstdio>

#include "ample/acceptance.hpp"

int main() {
  bool all = true;
  auto results = ample::run_acceptance(+[](const ample::CriterionResult& c) {
    std::printf("%s %s: %s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(), c.detail.c_str());
    std::fflush(stdout);
  });
  for (const auto& c : results) all = all && c.pass;
  return all ? 0 : 1;
}

// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

#include <cstdlib>
#include <iostream>
#include <string>

#include "spin7/suite.hpp"

int main(int argc, char** argv) {
  spin7::SuiteConfig cfg;
  if (argc > 1) cfg.seed = std::stoull(argv[1]);
  bool all = true;
  for (const auto& r : spin7::run_acceptance(cfg)) {
    all = all && r.passed;
    std::cout << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.name << " | " << r.detail
              << " | residual " << r.residual << " threshold " << r.threshold << '\n';
  }
  return all ? EXIT_SUCCESS : EXIT_FAILURE;
}

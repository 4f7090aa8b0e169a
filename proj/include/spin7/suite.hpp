#pragma once

// The acceptance criteria as runnable checks, shared by the CLI `verify` command and the
// acceptance test binary.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "spin7/quasi_abelian.hpp"

namespace spin7 {

struct SuiteConfig {
  // Numeric thresholds are the pinned values at the default 1e-9 and scale linearly with it.
  double tolerance = 1e-9;
  std::uint64_t seed = 20240607;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  bool exact = false;       // exact-arithmetic check, independent of the tolerance
  double residual = 0.0;    // worst residual observed (0 for exact checks)
  double threshold = 0.0;
  std::string detail;
};

// Portable uniform draws on top of mt19937_64, so the samples do not depend on the standard library.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : gen_(seed) {}
  double uniform(double lo = -1.0, double hi = 1.0);
  Mat7 matrix();
  Mat7 skew();
  Spinor16<double> unit_positive_spinor();

 private:
  std::mt19937_64 gen_;
};

CriterionResult criterion_representation(const SuiteConfig& cfg);
CriterionResult criterion_omega(const SuiteConfig& cfg);
CriterionResult criterion_eigenvalues(const SuiteConfig& cfg);
CriterionResult criterion_c_map(const SuiteConfig& cfg);
CriterionResult criterion_determinant(const SuiteConfig& cfg);
CriterionResult criterion_dual_path(const SuiteConfig& cfg);
CriterionResult criterion_examples(const SuiteConfig& cfg);
CriterionResult criterion_characteristic(const SuiteConfig& cfg);
CriterionResult criterion_lee_form(const SuiteConfig& cfg);
CriterionResult criterion_g2_table(const SuiteConfig& cfg);
CriterionResult criterion_unimodular(const SuiteConfig& cfg);

std::vector<CriterionResult> run_acceptance(const SuiteConfig& cfg);

}  // namespace spin7

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mfcalc {

struct SelfTestOptions {
  int max_k = 12;        // oracle / spot-value range
  int tower_max_k = 8;   // tower equality range
  int classify_cases = 200;
  int snf_cases = 1000;
  int snf_max_dim = 40;
  int distributivity_cases = 200;
  int tunnel_cases = 200;
  std::uint64_t seed = 20211015;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Each acceptance criterion on its own.
CriterionResult check_oracle_equality(const SelfTestOptions& options);
CriterionResult check_tower_equality(const SelfTestOptions& options);
CriterionResult check_spot_values(const SelfTestOptions& options);
CriterionResult check_suspension_identities(const SelfTestOptions& options);
CriterionResult check_pullback_branches(const SelfTestOptions& options);
CriterionResult check_framing_calculus(const SelfTestOptions& options);
CriterionResult check_six_manifold_grammar(const SelfTestOptions& options);
CriterionResult check_homology_formulas(const SelfTestOptions& options);
CriterionResult check_algebra_kernel(const SelfTestOptions& options);

/// All nine criteria in order.
std::vector<CriterionResult> run_selftest(const SelfTestOptions& options);

}  // namespace mfcalc

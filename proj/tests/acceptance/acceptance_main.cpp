// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <cstdio>

#include "mfcalc/selftest.hpp"

int main() {
  mfcalc::SelfTestOptions options;
  // Ranges and sample counts are the acceptance thresholds; do not shrink.
  options.max_k = 12;
  options.tower_max_k = 8;
  options.classify_cases = 200;
  options.snf_cases = 1000;
  options.snf_max_dim = 40;
  options.distributivity_cases = 200;
  options.tunnel_cases = 200;

  // Wall-clock budgets in seconds, by criterion id.
  const double budget[] = {0, 30.0, 1.0, 60, 60, 60, 60, 60, 60, 120};

  bool all = true;
  for (auto r : mfcalc::run_selftest(options)) {
    if (r.passed && r.seconds > budget[r.id]) {
      r.passed = false;
      r.detail += "; over time budget";
    }
    all = all && r.passed;
    std::printf("%s criterion %d: %s [%.2fs] %s\n", r.passed ? "PASS" : "FAIL", r.id,
                r.title.c_str(), r.seconds, r.detail.c_str());
  }
  return all ? 0 : 1;
}

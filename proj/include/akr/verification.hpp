#pragma once

#include <functional>
#include <string>
#include <vector>

namespace akr {

/// |estimate - target| <= tolerance * max(|target|, kZeroTargetScale).
///
/// Relative for targets of magnitude >= kZeroTargetScale; targets that
/// vanish (e.g. the drift at a critical point of f) fall back to an absolute
/// tolerance of tolerance * kZeroTargetScale.
inline constexpr double kZeroTargetScale = 1e-2;

[[nodiscard]] bool within_relative(double estimate, double target, double tolerance);

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  double time_limit_seconds = 0.0;
};

/// Tolerances and thresholds of the verification suite.
struct SuiteTolerances {
  double fixed_point = 1e-12;
  double remainder_slack = 1e-15;
  double lemma_floor = -1e-13;
  double lemma_limit = 1e-2;
  double akr_1d_relative = 1e-2;
  double theorem_relative = 2e-2;
  double drift_relative = 2e-2;
  double decomposition_identity = 1e-10;
};

using ProgressCallback = std::function<void(const CriterionResult&)>;

/// Runs the eight verification criteria in order. A criterion passes only
/// when its numerical check holds and it finishes within its time limit.
[[nodiscard]] std::vector<CriterionResult> run_verification_suite(
    const SuiteTolerances& tolerances = {}, const ProgressCallback& progress = {});

}  // namespace akr

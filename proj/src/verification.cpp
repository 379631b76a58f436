#include "akr/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <utility>

#include "akr/akr.hpp"
#include "akr/asymptotics.hpp"
#include "akr/catalog.hpp"
#include "akr/tensor.hpp"

namespace akr {

namespace {

template <class... Args>
std::string format(const char* fmt, Args... args) {
  char buffer[256];
  std::snprintf(buffer, sizeof buffer, fmt, args...);
  return buffer;
}

struct Outcome {
  bool passed = true;
  std::string detail;
};

constexpr Schedule kDefaultSchedule{64, 7};

const std::pair<double, double> kLimitPoints[] = {{0.5, 0.5}, {0.7, 0.3}};
const char* const kLimitFunctions[] = {"exp-sum", "runge-2d"};

Outcome fixed_points(const SuiteTolerances& tol) {
  double worst = 0.0;
  for (const int j : {2, 3}) {
    for (const int n : {16, 64, 256}) worst = std::max(worst, fixed_point_error(n, j, 101));
  }
  return {worst <= tol.fixed_point, format("max fixed-point error %.3e", worst)};
}

Outcome remainder_properties(const SuiteTolerances& tol) {
  int violations = 0;
  double min_r = 0.0;
  double worst_gap = 0.0;
  for (int n = 2; n <= 4096; ++n) {
    const double expected0 = -1.0 / (2.0 * n);
    const double ulp = std::nextafter(std::abs(expected0), 1.0) - std::abs(expected0);
    if (std::abs(remainder_R(n, 0) - expected0) > ulp) ++violations;
    const double inv_n = 1.0 / n;
    for (int k = 0; k <= n; ++k) {
      if (k >= 1) {
        const double r = remainder_R(n, k);
        min_r = std::min(min_r, r);
        if (r < -tol.remainder_slack) ++violations;
      }
      const double gap = static_cast<double>(k) / n - akr_node(n, k, 2);
      worst_gap = std::max(worst_gap, gap - inv_n);
      if (gap < -tol.remainder_slack || gap > inv_n + tol.remainder_slack) ++violations;
    }
  }
  return {violations == 0, format("%d violations; min R(n,k>=1) %.3e; max (k/n - t) - 1/n %.3e",
                                  violations, min_r, worst_gap)};
}

Outcome lemma(const SuiteTolerances& tol) {
  Outcome out;
  for (const double x : {0.1, 0.25, 0.5, 0.75, 1.0}) {
    const ConvergenceSeries s = lemma_series(x, kDefaultSchedule);
    double smallest = s.entries.front().value;
    bool all_zero = true;
    for (const auto& e : s.entries) {
      smallest = std::min(smallest, e.value);
      all_zero = all_zero && e.value == 0.0;
    }
    bool ok = smallest >= tol.lemma_floor;
    double limit = 0.0;
    if (x == 1.0) {
      ok = ok && all_zero;
    } else {
      limit = extrapolate(s).limit_estimate;
      ok = ok && std::abs(limit) <= tol.lemma_limit;
    }
    out.passed = out.passed && ok;
    out.detail += format("x=%.2f limit %.2e min %.2e; ", x, limit, smallest);
  }
  return out;
}

Outcome akr_1d(const SuiteTolerances& tol) {
  Outcome out;
  const Function1D e1 = lookup("e1").function1d();
  for (const double x : {0.3, 0.5, 0.9}) {
    const auto r = extrapolate(residual_series(OperatorKind::akr_1d, e1, x, kDefaultSchedule));
    const double target = -(1.0 - x) / 2.0;
    const bool ok = within_relative(r.limit_estimate, target, tol.akr_1d_relative);
    out.passed = out.passed && ok;
    out.detail += format("x=%.1f %.6f vs %.6f; ", x, r.limit_estimate, target);
  }
  return out;
}

Outcome two_dimensional_limits(OperatorKind kind, double tolerance) {
  Outcome out;
  for (const char* name : kLimitFunctions) {
    const Function2D f = lookup(name).function2d().without_factors();
    for (const auto& [x, y] : kLimitPoints) {
      const SquarePoint p(x, y);
      const auto r = extrapolate(residual_series(kind, f, p, kDefaultSchedule));
      const double target = *expected_limit(kind, f, p, 2);
      const bool ok = within_relative(r.limit_estimate, target, tolerance);
      out.passed = out.passed && ok;
      out.detail += format("%s(%.1f,%.1f) %.6f vs %.6f; ", name, x, y, r.limit_estimate, target);
    }
  }
  return out;
}

Outcome decomposition_check(const SuiteTolerances& tol) {
  Outcome out;
  const Function2D f = lookup("exp-sum").function2d().without_factors();
  double worst_identity = 0.0;
  double worst_ratio = 0.0;
  for (const int n : {64, 256, 1024}) {
    for (const auto& [x, y] : kLimitPoints) {
      const SquarePoint p(x, y);
      const Decomposition d = decomposition(f, n, p);
      const double recomputed = n * (tensor_akr_apply(f, n, 2, p, TensorPath::double_sum) -
                                     tensor_bernstein_apply(f, n, p, TensorPath::double_sum));
      const double identity = std::abs(recomputed - (d.e_term + d.f_term + d.g_residual));
      const double bound = 4.0 * std::exp(2.0) / (2.0 * n);
      worst_identity = std::max(worst_identity, identity);
      worst_ratio = std::max(worst_ratio, std::abs(d.g_residual) / bound);
      out.passed = out.passed && identity <= tol.decomposition_identity &&
                   std::abs(d.g_residual) <= bound;
    }
  }
  out.detail = format("max |total - (E+F+G)| %.3e; max |G|/bound %.3f", worst_identity, worst_ratio);
  return out;
}

Outcome extrapolator_oracles() {
  std::vector<double> constant(8, 2.5);
  std::vector<double> first_order(8);
  std::vector<double> half_order(8);
  for (int m = 0; m < 8; ++m) {
    first_order[m] = 1.0 + std::exp2(-m);
    half_order[m] = 3.0 + std::exp2(-m / 2.0);
  }
  const auto c = extrapolate(constant);
  const auto a = extrapolate(first_order);
  const auto b = extrapolate(half_order);
  const bool ok = c.limit_estimate == 2.5 && c.residual_tail == 0.0 &&
                  std::abs(a.limit_estimate - 1.0) <= 1e-10 && a.rate_estimate &&
                  std::abs(*a.rate_estimate - 1.0) <= 1e-6 &&
                  std::abs(b.limit_estimate - 3.0) <= 1e-6 && b.rate_estimate &&
                  std::abs(*b.rate_estimate - 0.5) <= 1e-3;
  return {ok, format("1+2^-m -> %.12f (p %.6f); 3+2^-m/2 -> %.9f (p %.6f)", a.limit_estimate,
                     a.rate_estimate.value_or(0.0), b.limit_estimate,
                     b.rate_estimate.value_or(0.0))};
}

}  // namespace

bool within_relative(double estimate, double target, double tolerance) {
  return std::abs(estimate - target) <= tolerance * std::max(std::abs(target), kZeroTargetScale);
}

std::vector<CriterionResult> run_verification_suite(const SuiteTolerances& tol,
                                                    const ProgressCallback& progress) {
  struct Criterion {
    int id;
    const char* name;
    double time_limit;
    std::function<Outcome()> check;
  };
  const std::vector<Criterion> criteria{
      {1, "fixed-point reproduction", 1.0, [&] { return fixed_points(tol); }},
      {2, "remainder properties", 10.0, [&] { return remainder_properties(tol); }},
      {3, "lemma sum vanishes", 30.0, [&] { return lemma(tol); }},
      {4, "1D AKR Voronovskaja", 10.0, [&] { return akr_1d(tol); }},
      {5, "2D AKR Voronovskaja", 180.0,
       [&] { return two_dimensional_limits(OperatorKind::akr_2d, tol.theorem_relative); }},
      {6, "drift identity", 180.0,
       [&] {
         return two_dimensional_limits(OperatorKind::akr_minus_bernstein_2d, tol.drift_relative);
       }},
      {7, "E/F/G decomposition", 30.0, [&] { return decomposition_check(tol); }},
      {8, "extrapolator oracles", 1.0, [] { return extrapolator_oracles(); }},
  };

  std::vector<CriterionResult> results;
  for (const auto& c : criteria) {
    CriterionResult r;
    r.id = c.id;
    r.name = c.name;
    r.time_limit_seconds = c.time_limit;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.passed = outcome.passed && r.seconds < c.time_limit;
    r.detail = std::move(outcome.detail);
    if (progress) progress(r);
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace akr

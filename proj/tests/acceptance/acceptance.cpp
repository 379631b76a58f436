// Acceptance checks: one [PASS]/[FAIL] line per criterion, nonzero exit on
// any failure. Each criterion is checked against the public API directly,
// independently of akr::run_verification_suite.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "akr/akr.hpp"
#include "akr/asymptotics.hpp"
#include "akr/bernstein.hpp"
#include "akr/catalog.hpp"
#include "akr/tensor.hpp"

namespace {

using akr::SquarePoint;

struct Check {
  bool ok = true;
  std::ostringstream detail;
};

constexpr akr::Schedule kSchedule{64, 7};
const std::pair<double, double> kPoints[] = {{0.5, 0.5}, {0.7, 0.3}};

bool relative_ok(double est, double target, double tol) {
  return std::abs(est - target) <= tol * std::max(std::abs(target), 1e-2);
}

void check_fixed_points(Check& c) {
  // Evaluated here on an explicit 101-point grid, not via fixed_point_error.
  double worst = 0.0;
  for (const int j : {2, 3}) {
    const akr::Function1D one{[](double) { return 1.0; }, {}, {}};
    const akr::Function1D ej{[j](double t) { return std::pow(t, j); }, {}, {}};
    for (const int n : {16, 64, 256}) {
      for (int i = 0; i <= 100; ++i) {
        const double x = i / 100.0;
        worst = std::max(worst, std::abs(akr::akr_apply(one, n, j, x) - 1.0));
        worst = std::max(worst, std::abs(akr::akr_apply(ej, n, j, x) - std::pow(x, j)));
      }
    }
  }
  c.ok = worst <= 1e-12;
  c.detail << "max error " << worst;
}

void check_remainder(Check& c) {
  long bad = 0;
  double min_r = 0.0;
  for (int n = 2; n <= 4096; ++n) {
    const double r0 = akr::remainder_R(n, 0);
    const double expect = -1.0 / (2.0 * n);
    if (std::abs(r0 - expect) > std::abs(std::nextafter(expect, 0.0) - expect)) ++bad;
    const akr::NodeTable table = akr::build_node_table(n, 2);
    for (int k = 0; k <= n; ++k) {
      if (k >= 1) {
        const double r = akr::remainder_R(n, k);
        min_r = std::min(min_r, r);
        if (r < -1e-15) ++bad;
      }
      const double gap = static_cast<double>(k) / n - table[k];
      if (gap < -1e-15 || gap > 1.0 / n + 1e-15) ++bad;
    }
  }
  c.ok = bad == 0;
  c.detail << bad << " violations, min R(n,k>=1) " << min_r;
}

void check_lemma(Check& c) {
  for (const double x : {0.1, 0.25, 0.5, 0.75, 1.0}) {
    std::vector<double> values;
    for (const int n : kSchedule.degrees()) values.push_back(akr::lemma_sum(n, x));
    const double smallest = *std::min_element(values.begin(), values.end());
    bool ok = smallest >= -1e-13;
    double limit = 0.0;
    if (x == 1.0) {
      ok = ok && std::all_of(values.begin(), values.end(), [](double v) { return v == 0.0; });
    } else {
      limit = akr::extrapolate(values).limit_estimate;
      ok = ok && std::abs(limit) <= 1e-2;
    }
    c.ok = c.ok && ok;
    c.detail << "x=" << x << ":" << limit << " ";
  }
}

void check_voronovskaja_1d(Check& c) {
  const akr::Function1D e1{[](double t) { return t; }, {}, {}};
  for (const double x : {0.3, 0.5, 0.9}) {
    std::vector<double> values;
    for (const int n : kSchedule.degrees()) values.push_back(n * (akr::akr_apply(e1, n, 2, x) - x));
    const double limit = akr::extrapolate(values).limit_estimate;
    const double target = -(1.0 - x) / 2.0;
    c.ok = c.ok && relative_ok(limit, target, 1e-2);
    c.detail << "x=" << x << ":" << limit << "/" << target << " ";
  }
}

// Limits of n(B^[2]_{n,2} f - f) (criterion 5) or n(B^[2]_{n,2} f - B^[2]_n f)
// (criterion 6); targets from hand-coded partials, not from the library.
struct TargetFunction {
  const char* name;
  std::function<double(double, double)> voronovskaja;
  std::function<double(double, double)> drift;
};

std::vector<TargetFunction> target_functions() {
  const auto runge_fx = [](double x, double y) {
    const double d = 1 + 25 * (x - 0.5) * (x - 0.5) + 25 * (y - 0.5) * (y - 0.5);
    return -50 * (x - 0.5) / (d * d);
  };
  const auto runge_fxx = [](double x, double y) {
    const double u = x - 0.5;
    const double d = 1 + 25 * u * u + 25 * (y - 0.5) * (y - 0.5);
    return (-50 * d + 5000 * u * u) / (d * d * d);
  };
  return {
      {"exp-sum",
       [](double x, double y) {
         const double e = std::exp(x + y);
         return x * (1 - x) / 2 * e + y * (1 - y) / 2 * e - (1 - x) / 2 * e - (1 - y) / 2 * e;
       },
       [](double x, double y) {
         const double e = std::exp(x + y);
         return -(1 - x) / 2 * e - (1 - y) / 2 * e;
       }},
      {"runge-2d",
       [=](double x, double y) {
         return x * (1 - x) / 2 * runge_fxx(x, y) + y * (1 - y) / 2 * runge_fxx(y, x) -
                (1 - x) / 2 * runge_fx(x, y) - (1 - y) / 2 * runge_fx(y, x);
       },
       [=](double x, double y) { return -(1 - x) / 2 * runge_fx(x, y) - (1 - y) / 2 * runge_fx(y, x); }},
  };
}

void check_two_dimensional(Check& c, bool drift) {
  for (const auto& tf : target_functions()) {
    const akr::Function2D f = akr::lookup(tf.name).function2d().without_factors();
    for (const auto& [x, y] : kPoints) {
      const SquarePoint p(x, y);
      std::vector<double> values;
      for (const int n : kSchedule.degrees()) {
        const double v = drift ? akr::tensor_akr_minus_bernstein(f, n, 2, p)
                               : akr::tensor_akr_apply(f, n, 2, p) - f(x, y);
        values.push_back(n * v);
      }
      const double limit = akr::extrapolate(values).limit_estimate;
      const double target = drift ? tf.drift(x, y) : tf.voronovskaja(x, y);
      c.ok = c.ok && relative_ok(limit, target, 2e-2);
      c.detail << tf.name << "(" << x << "," << y << "):" << limit << "/" << target << " ";
    }
  }
}

void check_decomposition(Check& c) {
  const akr::Function2D f = akr::lookup("exp-sum").function2d().without_factors();
  double worst_identity = 0.0, worst_ratio = 0.0;
  for (const int n : {64, 256, 1024}) {
    for (const auto& [x, y] : kPoints) {
      const SquarePoint p(x, y);
      const akr::Decomposition d = akr::decomposition(f, n, p);
      const double total = n * (akr::tensor_akr_apply(f, n, 2, p, akr::TensorPath::double_sum) -
                                akr::tensor_bernstein_apply(f, n, p, akr::TensorPath::double_sum));
      const double bound = 4 * std::exp(2.0) / (2.0 * n);
      worst_identity = std::max(worst_identity, std::abs(total - (d.e_term + d.f_term + d.g_residual)));
      worst_ratio = std::max(worst_ratio, std::abs(d.g_residual) / bound);
    }
  }
  c.ok = worst_identity <= 1e-10 && worst_ratio <= 1.0;
  c.detail << "identity " << worst_identity << ", |G|/bound " << worst_ratio;
}

void check_extrapolator(Check& c) {
  std::vector<double> constant(6, 7.25), first(8), half(8);
  for (int m = 0; m < 8; ++m) {
    first[m] = 1.0 + std::exp2(-m);
    half[m] = 3.0 + std::exp2(-m / 2.0);
  }
  const auto rc = akr::extrapolate(constant);
  const auto r1 = akr::extrapolate(first);
  const auto r2 = akr::extrapolate(half);
  c.ok = rc.limit_estimate == 7.25 && rc.residual_tail == 0.0 &&
         std::abs(r1.limit_estimate - 1.0) <= 1e-10 && r1.rate_estimate &&
         std::abs(*r1.rate_estimate - 1.0) <= 1e-6 && std::abs(r2.limit_estimate - 3.0) <= 1e-6 &&
         r2.rate_estimate && std::abs(*r2.rate_estimate - 0.5) <= 1e-3;
  c.detail << "limits " << r1.limit_estimate << ", " << r2.limit_estimate;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<void(Check&)> body;
  };
  const std::vector<Criterion> criteria{
      {1, "fixed-point reproduction", 1, check_fixed_points},
      {2, "remainder properties", 10, check_remainder},
      {3, "lemma sum vanishes", 30, check_lemma},
      {4, "1D AKR Voronovskaja", 10, check_voronovskaja_1d},
      {5, "2D AKR Voronovskaja", 180, [](Check& c) { check_two_dimensional(c, false); }},
      {6, "drift identity", 180, [](Check& c) { check_two_dimensional(c, true); }},
      {7, "E/F/G decomposition", 30, check_decomposition},
      {8, "extrapolator oracles", 1, check_extrapolator},
  };
  int failures = 0;
  for (const auto& cr : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.body(check);
    } catch (const std::exception& e) {
      check.ok = false;
      check.detail << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = check.ok && secs < cr.limit_seconds;
    failures += ok ? 0 : 1;
    std::printf("[%s] criterion %d %s (%.2fs / %.0fs) %s\n", ok ? "PASS" : "FAIL", cr.id, cr.name, secs,
                cr.limit_seconds, check.detail.str().c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}

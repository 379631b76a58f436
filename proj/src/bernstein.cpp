#include "akr/bernstein.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "akr/errors.hpp"

namespace akr {

namespace {

// Rounded logs would scale every weight by about 1 + n*ulp; the extended
// precision tail is kept as the low word.
DoubleDouble split(long double v) {
  const double hi = static_cast<double>(v);
  return {hi, static_cast<double>(v - hi)};
}

DoubleDouble log_dd(double v) { return split(std::log(static_cast<long double>(v))); }
DoubleDouble log1p_dd(double v) { return split(std::log1p(static_cast<long double>(v))); }

DoubleDouble scale(double k, DoubleDouble v) {
  const DoubleDouble p = two_prod(k, v.hi);
  return p + DoubleDouble{k * v.lo, 0.0};
}

double exponentiate(DoubleDouble log_binom, int k, int n, DoubleDouble log_x,
                    DoubleDouble log_1mx) {
  const DoubleDouble e = log_binom + scale(static_cast<double>(k), log_x) +
                         scale(static_cast<double>(n - k), log_1mx);
  return std::exp(e.value());
}

}  // namespace

BasisContext::BasisContext(int n) : n_(n) {
  if (n < 1) {
    throw DomainError("Bernstein degree must be >= 1, got " + std::to_string(n));
  }
  log_fact_.resize(static_cast<std::size_t>(n) + 1);
  for (int m = 2; m <= n; ++m) {
    log_fact_[m] = log_fact_[m - 1] + log_dd(static_cast<double>(m));
  }
}

DoubleDouble BasisContext::log_factorial(int m) const {
  if (m < 0 || m > n_) {
    throw DomainError("log_factorial index " + std::to_string(m) + " outside [0," +
                      std::to_string(n_) + "]");
  }
  return log_fact_[m];
}

DoubleDouble BasisContext::log_binomial(int k) const {
  if (k < 0 || k > n_) {
    throw DomainError("binomial index " + std::to_string(k) + " outside [0," +
                      std::to_string(n_) + "]");
  }
  return log_fact_[n_] - log_fact_[k] - log_fact_[n_ - k];
}

double BasisContext::weight(int k, double x) const {
  if (k < 0 || k > n_) {
    throw DomainError("basis index k=" + std::to_string(k) + " outside [0," +
                      std::to_string(n_) + "]");
  }
  require_unit_interval(x, "x");
  if (x == 0.0) return k == 0 ? 1.0 : 0.0;
  if (x == 1.0) return k == n_ ? 1.0 : 0.0;
  return exponentiate(log_binomial(k), k, n_, log_dd(x), log1p_dd(-x));
}

std::vector<double> BasisContext::weights(double x) const {
  std::vector<double> out(static_cast<std::size_t>(n_) + 1);
  weights(x, out);
  return out;
}

void BasisContext::weights(double x, std::span<double> out) const {
  if (out.size() != static_cast<std::size_t>(n_) + 1) {
    throw DomainError("weights buffer must hold n+1 entries");
  }
  require_unit_interval(x, "x");
  std::fill(out.begin(), out.end(), 0.0);
  if (x == 0.0) {
    out.front() = 1.0;
    return;
  }
  if (x == 1.0) {
    out.back() = 1.0;
    return;
  }
  const DoubleDouble log_x = log_dd(x);
  const DoubleDouble log_1mx = log1p_dd(-x);
  for (int k = 0; k <= n_; ++k) {
    out[k] = exponentiate(log_fact_[n_] - log_fact_[k] - log_fact_[n_ - k], k, n_, log_x,
                          log_1mx);
  }
}

double basis_weight(const BasisContext& ctx, int k, double x) { return ctx.weight(k, x); }

double weighted_sum(std::span<const double> values, std::span<const double> weights) {
  if (values.size() != weights.size()) {
    throw DomainError("weighted_sum: size mismatch");
  }
  CompensatedSum acc;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (weights[i] == 0.0) continue;
    acc.add(values[i] * weights[i]);
  }
  return acc.value();
}

double bernstein_apply(const Function1D& f, const BasisContext& ctx, double x) {
  const int n = ctx.degree();
  const std::vector<double> w = ctx.weights(x);
  CompensatedSum acc;
  for (int i = 0; i <= n; ++i) {
    if (w[i] == 0.0) continue;
    acc.add(f(static_cast<double>(i) / n) * w[i]);
  }
  return acc.value();
}

double bernstein_apply(const Function1D& f, int n, double x) {
  return bernstein_apply(f, BasisContext(n), x);
}

}  // namespace akr

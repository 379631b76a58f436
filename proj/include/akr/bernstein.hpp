#pragma once

/**
 * @file bernstein.hpp
 * @brief Bernstein basis p_{n,k}(x) = C(n,k) x^k (1-x)^(n-k) and the
 *        classical Bernstein operator on [0,1].
 *
 * Weights are evaluated in the log domain,
 *
 *     p_{n,k}(x) = exp( ln C(n,k) + k ln x + (n-k) ln(1-x) ),
 *
 * so that degrees in the tens of thousands neither overflow the binomial
 * coefficient nor underflow the powers before they are combined. ln C(n,k)
 * comes from a double-double table of ln(m!), and the three terms of the
 * exponent are combined in double-double arithmetic; the weight is
 * exponentiated once. x = 0 and x = 1 are handled by exact branches.
 */

#include <span>
#include <vector>

#include "akr/function.hpp"
#include "akr/summation.hpp"

namespace akr {

/// Degree n together with a table of ln(m!) for m = 0..n.
/// Immutable after construction; safe to share between threads.
class BasisContext {
 public:
  /// Throws DomainError when n < 1.
  explicit BasisContext(int n);

  [[nodiscard]] int degree() const noexcept { return n_; }

  /// ln(m!) as a double-double, 0 <= m <= n.
  [[nodiscard]] DoubleDouble log_factorial(int m) const;

  /// ln C(n,k) as a double-double.
  [[nodiscard]] DoubleDouble log_binomial(int k) const;

  /// p_{n,k}(x). Throws DomainError for k outside [0,n] or x outside [0,1].
  [[nodiscard]] double weight(int k, double x) const;

  /// All n+1 weights p_{n,0}(x), ..., p_{n,n}(x).
  [[nodiscard]] std::vector<double> weights(double x) const;

  /// Writes the n+1 weights into `out` (out.size() must be n+1).
  void weights(double x, std::span<double> out) const;

 private:
  int n_;
  std::vector<DoubleDouble> log_fact_;
};

/// p_{n,k}(x) for the degree held by `ctx`.
[[nodiscard]] double basis_weight(const BasisContext& ctx, int k, double x);

/// sum_{i=0}^n f(i/n) p_{n,i}(x), accumulated in ascending i.
[[nodiscard]] double bernstein_apply(const Function1D& f, int n, double x);

/// Same sum with a caller-held context (avoids rebuilding the table).
[[nodiscard]] double bernstein_apply(const Function1D& f, const BasisContext& ctx, double x);

/// sum_k values[k] * weights[k] in ascending k with compensated
/// accumulation. Terms with an exactly zero weight are skipped.
[[nodiscard]] double weighted_sum(std::span<const double> values, std::span<const double> weights);

}  // namespace akr

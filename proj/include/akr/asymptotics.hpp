#pragma once

/**
 * @file asymptotics.hpp
 * @brief Voronovskaja-type limits for the j = 2 AKR operators and the tools
 *        used to check them numerically.
 *
 * For 0 < x, y <= 1 and f in C^2:
 *
 *   n (B_{n,2} f - f)(x)        -> x(1-x)/2 f'' - (1-x)/2 f'
 *   n (B_n f - f)(x)            -> x(1-x)/2 f''
 *   n (B_{n,2}^{[2]} f - f)     -> x(1-x)/2 f_xx + y(1-y)/2 f_yy
 *                                  - (1-x)/2 f_x - (1-y)/2 f_y
 *   n (B_{n,2}^{[2]} - B_n^{[2]}) f -> -(1-x)/2 f_x - (1-y)/2 f_y   (drift)
 *   n sum_{k>=1} p_{n,k}(x) R(n,k)  -> 0
 *
 * Residual series sample these scaled differences along n0 * 2^m and
 * `extrapolate` estimates their limits without assuming a rate.
 */

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "akr/function.hpp"
#include "akr/tensor.hpp"

namespace akr {

enum class DerivativePolicy {
  exact_only,               ///< missing derivatives raise CapabilityError
  allow_finite_difference,  ///< missing derivatives are approximated
};

/// n * sum_{k=1}^n p_{n,k}(x) R(n,k). Requires n >= 2 and 0 < x <= 1.
[[nodiscard]] double lemma_sum(int n, double x);

/// x(1-x)/2 f''(x) - (1-x)/2 f'(x), for 0 < x <= 1.
[[nodiscard]] double voronovskaja_rhs_1d(const Function1D& f, double x,
                                         DerivativePolicy policy = DerivativePolicy::exact_only);

/// x(1-x)/2 f''(x), for x in [0,1].
[[nodiscard]] double classical_rhs_1d(const Function1D& f, double x,
                                      DerivativePolicy policy = DerivativePolicy::exact_only);

/// x(1-x)/2 f_xx + y(1-y)/2 f_yy - (1-x)/2 f_x - (1-y)/2 f_y, for x, y > 0.
[[nodiscard]] double voronovskaja_rhs_2d(const Function2D& f, SquarePoint p,
                                         DerivativePolicy policy = DerivativePolicy::exact_only);

/// x(1-x)/2 f_xx + y(1-y)/2 f_yy.
[[nodiscard]] double classical_rhs_2d(const Function2D& f, SquarePoint p,
                                      DerivativePolicy policy = DerivativePolicy::exact_only);

/// -(1-x)/2 f_x - (1-y)/2 f_y.
[[nodiscard]] double drift_2d(const Function2D& f, SquarePoint p,
                              DerivativePolicy policy = DerivativePolicy::exact_only);

/// Split of n (B_{n,2}^{[2]} f - B_n^{[2]} f)(p) into the first-order x term
/// (E), the first-order y term (F) and the Taylor remainder (G).
///
/// The intermediate points of the Taylor remainder are not constructible, so
/// G is defined as total - E - F.
struct Decomposition {
  int n = 0;
  double e_term = 0.0;
  double f_term = 0.0;
  double g_residual = 0.0;
  double total = 0.0;
};

/// Requires n >= 2 and exact first partials (CapabilityError otherwise).
[[nodiscard]] Decomposition decomposition(const Function2D& f, int n, SquarePoint p);

/// (M_xx + 2 M_xy + M_yy) / (2n), the bound on |G| implied by
/// 0 <= k/n - t_{n,k} <= 1/n. Empty when f has no sup_bounds.
[[nodiscard]] std::optional<double> g_residual_bound(const Function2D& f, int n);

enum class OperatorKind {
  bernstein_1d,
  akr_1d,
  bernstein_2d,
  akr_2d,
  akr_minus_bernstein_2d,
  lemma_sum,
};

[[nodiscard]] std::string_view to_string(OperatorKind kind);

/// Inverse of to_string; throws DomainError for unknown tags.
[[nodiscard]] OperatorKind parse_operator_kind(std::string_view tag);

[[nodiscard]] bool is_two_dimensional(OperatorKind kind);
[[nodiscard]] bool uses_akr_nodes(OperatorKind kind);

/// Degrees n0, 2 n0, ..., 2^doublings n0.
struct Schedule {
  int n0 = 64;
  int doublings = 7;

  [[nodiscard]] std::vector<int> degrees() const;
};

struct SeriesEntry {
  int n = 0;
  double value = 0.0;
};

struct ConvergenceSeries {
  OperatorKind kind = OperatorKind::akr_1d;
  int j = 2;
  std::vector<double> point;  // one or two coordinates
  std::vector<SeriesEntry> entries;

  /// Throws DomainError if degrees do not double or a value is not finite.
  void validate() const;
};

struct SeriesOptions {
  int j = 2;
  TensorPath path = TensorPath::automatic;
};

/// a_m = n_m (Op_{n_m} f - f)(x) for the 1D kinds.
[[nodiscard]] ConvergenceSeries residual_series(OperatorKind kind, const Function1D& f, double x,
                                                Schedule schedule, SeriesOptions options = {});

/// a_m = n_m (Op_{n_m} f - f)(p) for bernstein-2d and akr-2d, and
/// n_m (B_{n,j}^{[2]} f - B_n^{[2]} f)(p) for akr-minus-bernstein-2d.
[[nodiscard]] ConvergenceSeries residual_series(OperatorKind kind, const Function2D& f,
                                                SquarePoint p, Schedule schedule,
                                                SeriesOptions options = {});

/// a_m = lemma_sum(n_m, x).
[[nodiscard]] ConvergenceSeries lemma_series(double x, Schedule schedule);

struct ExtrapolationResult {
  double limit_estimate = 0.0;
  std::optional<double> rate_estimate;  // p in a_n ≈ L + c n^{-p}, always > 0
  double residual_tail = 0.0;           // |a_last - a_prev|
  bool monotone_tail = false;
};

/// Number of trailing admissible triples whose rates are averaged.
inline constexpr int kRateWindow = 2;

/// Estimates the limit of a doubling-schedule series (>= 4 entries).
///
/// For consecutive differences d_m = a_m - a_{m-1}, a triple
/// (a_{m-2}, a_{m-1}, a_m) is admissible when d_{m-1} and d_m are nonzero,
/// share a sign and |d_{m-1}| > |d_m|; its rate is log2(d_{m-1} / d_m). The
/// rate estimate averages the trailing run of admissible triples (at most
/// kRateWindow of them) and the limit takes one Richardson step on the last
/// pair. Without an admissible final triple the last value is reported.
[[nodiscard]] ExtrapolationResult extrapolate(const ConvergenceSeries& series);

/// Same, on a bare value sequence.
[[nodiscard]] ExtrapolationResult extrapolate(const std::vector<double>& values);

/// Per-entry rate log2(d_{m-1}/d_m); empty for the first two entries and for
/// non-admissible triples.
[[nodiscard]] std::vector<std::optional<double>> successive_rates(
    const std::vector<double>& values);

[[nodiscard]] std::vector<double> series_values(const ConvergenceSeries& series);

/// Closed-form limit of the series for f at the point, when one is known
/// (every kind with j = 2; bernstein kinds for any j). Requires exact
/// derivatives unless the policy allows finite differences.
[[nodiscard]] std::optional<double> expected_limit(
    OperatorKind kind, const Function1D& f, double x, int j,
    DerivativePolicy policy = DerivativePolicy::exact_only);

[[nodiscard]] std::optional<double> expected_limit(
    OperatorKind kind, const Function2D& f, SquarePoint p, int j,
    DerivativePolicy policy = DerivativePolicy::exact_only);

}  // namespace akr

#include "akr/asymptotics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "akr/akr.hpp"
#include "akr/bernstein.hpp"
#include "akr/derivatives.hpp"
#include "akr/errors.hpp"
#include "akr/parallel.hpp"
#include "akr/summation.hpp"

namespace akr {

namespace {

constexpr int kMaxDegree = 1 << 24;

void require_open_left(double x, const char* what) {
  if (!(x > 0.0 && x <= 1.0)) {
    throw DomainError(std::string(what) + " = " + describe_real(x) + " must lie in (0,1]");
  }
}

double derivative(const RealMap1D& exact, const Function1D& f, double x, DerivativeOrder order,
                  DerivativePolicy policy, const char* name) {
  if (exact) return exact(x);
  if (policy == DerivativePolicy::exact_only) {
    throw CapabilityError(std::string("function has no exact ") + name +
                          " and finite differences are disabled");
  }
  const Derivatives1D d = finite_difference_derivatives(f.eval, x, order);
  return order == DerivativeOrder::first ? d.d1 : *d.d2;
}

// Partials of f at p, exact where available.
struct PointPartials {
  double fx, fy, fxx, fyy;
};

PointPartials partials_at(const Function2D& f, SquarePoint p, bool need_first, bool need_second,
                          DerivativePolicy policy) {
  const bool missing = (need_first && !(f.fx && f.fy)) || (need_second && !(f.fxx && f.fyy));
  if (missing && policy == DerivativePolicy::exact_only) {
    throw CapabilityError("function lacks exact partials and finite differences are disabled");
  }
  std::optional<Partials2D> fd;
  if (missing) {
    fd = finite_difference_partials(
        f.eval, p, need_second ? DerivativeOrder::second : DerivativeOrder::first);
  }
  const double x = p.x();
  const double y = p.y();
  PointPartials out{};
  if (need_first) {
    out.fx = f.fx ? f.fx(x, y) : fd->fx;
    out.fy = f.fy ? f.fy(x, y) : fd->fy;
  }
  if (need_second) {
    out.fxx = f.fxx ? f.fxx(x, y) : *fd->fxx;
    out.fyy = f.fyy ? f.fyy(x, y) : *fd->fyy;
  }
  return out;
}

void require_positive_point(SquarePoint p) {
  require_open_left(p.x(), "x");
  require_open_left(p.y(), "y");
}

std::vector<double> uniform_nodes(int n) {
  std::vector<double> u(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) u[k] = static_cast<double>(k) / n;
  return u;
}

void check_schedule(Schedule s, int min_n0) {
  if (s.n0 < min_n0) {
    throw DomainError("schedule n0=" + std::to_string(s.n0) + " must be >= " +
                      std::to_string(min_n0));
  }
  if (s.doublings < 3) {
    throw DomainError("schedule too short for extrapolation: need >= 3 doublings, got " +
                      std::to_string(s.doublings));
  }
  if (s.doublings > 24 || (static_cast<long long>(s.n0) << s.doublings) > kMaxDegree) {
    throw DomainError("schedule exceeds the maximum degree " + std::to_string(kMaxDegree));
  }
}

ConvergenceSeries make_series(OperatorKind kind, int j, std::vector<double> point, Schedule s,
                              const std::function<double(int)>& value_at) {
  ConvergenceSeries series{kind, j, std::move(point), {}};
  const std::vector<int> degrees = s.degrees();
  series.entries.resize(degrees.size());
  parallel_for(degrees.size(), [&](std::size_t i) {
    series.entries[i] = {degrees[i], value_at(degrees[i])};
  });
  series.validate();
  return series;
}

bool admissible(double previous, double current) {
  return previous != 0.0 && current != 0.0 && (previous > 0.0) == (current > 0.0) &&
         std::abs(previous) > std::abs(current);
}

}  // namespace

double lemma_sum(int n, double x) {
  if (n < 2) {
    throw DomainError("lemma_sum needs n >= 2, got " + std::to_string(n));
  }
  require_open_left(x, "x");
  const BasisContext ctx(n);
  const std::vector<double> w = ctx.weights(x);
  CompensatedSum acc;
  for (int k = 1; k <= n; ++k) {
    if (w[k] == 0.0) continue;
    acc.add(w[k] * remainder_R(n, k));
  }
  return n * acc.value();
}

double voronovskaja_rhs_1d(const Function1D& f, double x, DerivativePolicy policy) {
  require_open_left(x, "x");
  const double d1 = derivative(f.d1, f, x, DerivativeOrder::first, policy, "first derivative");
  const double d2 = derivative(f.d2, f, x, DerivativeOrder::second, policy, "second derivative");
  return x * (1.0 - x) / 2.0 * d2 - (1.0 - x) / 2.0 * d1;
}

double classical_rhs_1d(const Function1D& f, double x, DerivativePolicy policy) {
  require_unit_interval(x, "x");
  const double d2 = derivative(f.d2, f, x, DerivativeOrder::second, policy, "second derivative");
  return x * (1.0 - x) / 2.0 * d2;
}

double voronovskaja_rhs_2d(const Function2D& f, SquarePoint p, DerivativePolicy policy) {
  require_positive_point(p);
  const PointPartials d = partials_at(f, p, true, true, policy);
  const double x = p.x();
  const double y = p.y();
  return x * (1.0 - x) / 2.0 * d.fxx + y * (1.0 - y) / 2.0 * d.fyy - (1.0 - x) / 2.0 * d.fx -
         (1.0 - y) / 2.0 * d.fy;
}

double classical_rhs_2d(const Function2D& f, SquarePoint p, DerivativePolicy policy) {
  const PointPartials d = partials_at(f, p, false, true, policy);
  const double x = p.x();
  const double y = p.y();
  return x * (1.0 - x) / 2.0 * d.fxx + y * (1.0 - y) / 2.0 * d.fyy;
}

double drift_2d(const Function2D& f, SquarePoint p, DerivativePolicy policy) {
  const PointPartials d = partials_at(f, p, true, false, policy);
  return -(1.0 - p.x()) / 2.0 * d.fx - (1.0 - p.y()) / 2.0 * d.fy;
}

Decomposition decomposition(const Function2D& f, int n, SquarePoint p) {
  if (n < 2) {
    throw DomainError("decomposition needs n >= 2, got " + std::to_string(n));
  }
  if (!f.has_first_partials()) {
    throw CapabilityError("decomposition needs exact first partials f_x and f_y");
  }
  const NodeTable nodes(n, 2);
  const auto t = nodes.nodes();
  const std::vector<double> u = uniform_nodes(n);
  const BasisContext ctx(n);
  const std::vector<double> wx = ctx.weights(p.x());
  const std::vector<double> wy = ctx.weights(p.y());

  Decomposition d;
  d.n = n;
  d.total = n * detail::tensor_sum(wx, wy, [&](int k, int l) {
              return f(t[k], t[l]) - f(u[k], u[l]);
            });
  d.e_term = n * detail::tensor_sum(wx, wy, [&](int k, int l) {
               const double shift = t[k] - u[k];
               return shift == 0.0 ? 0.0 : shift * f.fx(u[k], u[l]);
             });
  d.f_term = n * detail::tensor_sum(wx, wy, [&](int k, int l) {
               const double shift = t[l] - u[l];
               return shift == 0.0 ? 0.0 : shift * f.fy(u[k], u[l]);
             });
  d.g_residual = d.total - d.e_term - d.f_term;
  return d;
}

std::optional<double> g_residual_bound(const Function2D& f, int n) {
  if (!f.sup_bounds) return std::nullopt;
  const auto& m = *f.sup_bounds;
  return (m.xx + 2.0 * m.xy + m.yy) / (2.0 * n);
}

std::string_view to_string(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::bernstein_1d: return "bernstein-1d";
    case OperatorKind::akr_1d: return "akr-1d";
    case OperatorKind::bernstein_2d: return "bernstein-2d";
    case OperatorKind::akr_2d: return "akr-2d";
    case OperatorKind::akr_minus_bernstein_2d: return "akr-minus-bernstein-2d";
    case OperatorKind::lemma_sum: return "lemma-sum";
  }
  return "unknown";
}

OperatorKind parse_operator_kind(std::string_view tag) {
  constexpr std::array kinds{OperatorKind::bernstein_1d,
                             OperatorKind::akr_1d,
                             OperatorKind::bernstein_2d,
                             OperatorKind::akr_2d,
                             OperatorKind::akr_minus_bernstein_2d,
                             OperatorKind::lemma_sum};
  for (const OperatorKind kind : kinds) {
    if (to_string(kind) == tag) return kind;
  }
  throw DomainError("unknown operator kind '" + std::string(tag) +
                    "' (expected bernstein-1d, akr-1d, bernstein-2d, akr-2d, "
                    "akr-minus-bernstein-2d or lemma-sum)");
}

bool is_two_dimensional(OperatorKind kind) {
  return kind == OperatorKind::bernstein_2d || kind == OperatorKind::akr_2d ||
         kind == OperatorKind::akr_minus_bernstein_2d;
}

bool uses_akr_nodes(OperatorKind kind) {
  return kind == OperatorKind::akr_1d || kind == OperatorKind::akr_2d ||
         kind == OperatorKind::akr_minus_bernstein_2d || kind == OperatorKind::lemma_sum;
}

std::vector<int> Schedule::degrees() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(std::max(doublings, 0)) + 1);
  for (int m = 0; m <= doublings; ++m) out.push_back(n0 << m);
  return out;
}

void ConvergenceSeries::validate() const {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!std::isfinite(entries[i].value)) {
      throw DomainError("series value at n=" + std::to_string(entries[i].n) + " is not finite");
    }
    if (i > 0 && entries[i].n != 2 * entries[i - 1].n) {
      throw DomainError("series degrees must double at every step");
    }
  }
}

ConvergenceSeries residual_series(OperatorKind kind, const Function1D& f, double x,
                                  Schedule schedule, SeriesOptions options) {
  if (kind != OperatorKind::bernstein_1d && kind != OperatorKind::akr_1d) {
    throw DomainError("operator kind " + std::string(to_string(kind)) +
                      " does not take a 1D function");
  }
  const bool akr = kind == OperatorKind::akr_1d;
  if (akr) {
    if (options.j < 2) throw DomainError("AKR order j must be >= 2");
    require_open_left(x, "x");
  } else {
    require_unit_interval(x, "x");
  }
  check_schedule(schedule, akr ? std::max(2, options.j) : 2);
  const double fx = f(x);
  return make_series(kind, options.j, {x}, schedule, [&](int n) {
    const double op = akr ? akr_apply(f, n, options.j, x) : bernstein_apply(f, n, x);
    return n * (op - fx);
  });
}

ConvergenceSeries residual_series(OperatorKind kind, const Function2D& f, SquarePoint p,
                                  Schedule schedule, SeriesOptions options) {
  if (!is_two_dimensional(kind)) {
    throw DomainError("operator kind " + std::string(to_string(kind)) +
                      " does not take a 2D function");
  }
  const bool akr = uses_akr_nodes(kind);
  if (akr) {
    if (options.j < 2) throw DomainError("AKR order j must be >= 2");
    require_positive_point(p);
  }
  check_schedule(schedule, akr ? std::max(2, options.j) : 2);
  const double fp = f(p.x(), p.y());
  return make_series(kind, options.j, {p.x(), p.y()}, schedule, [&](int n) {
    switch (kind) {
      case OperatorKind::bernstein_2d:
        return n * (tensor_bernstein_apply(f, n, p, options.path) - fp);
      case OperatorKind::akr_2d:
        return n * (tensor_akr_apply(f, n, options.j, p, options.path) - fp);
      default:
        return n * tensor_akr_minus_bernstein(f, n, options.j, p, options.path);
    }
  });
}

ConvergenceSeries lemma_series(double x, Schedule schedule) {
  require_open_left(x, "x");
  check_schedule(schedule, 2);
  return make_series(OperatorKind::lemma_sum, 2, {x}, schedule,
                     [&](int n) { return lemma_sum(n, x); });
}

std::vector<double> series_values(const ConvergenceSeries& series) {
  std::vector<double> values;
  values.reserve(series.entries.size());
  for (const auto& e : series.entries) values.push_back(e.value);
  return values;
}

std::vector<std::optional<double>> successive_rates(const std::vector<double>& values) {
  std::vector<std::optional<double>> rates(values.size());
  for (std::size_t m = 2; m < values.size(); ++m) {
    const double previous = values[m - 1] - values[m - 2];
    const double current = values[m] - values[m - 1];
    if (admissible(previous, current)) rates[m] = std::log2(previous / current);
  }
  return rates;
}

ExtrapolationResult extrapolate(const std::vector<double>& values) {
  const std::size_t size = values.size();
  if (size < 4) {
    throw DomainError("extrapolation needs at least 4 entries, got " + std::to_string(size));
  }
  for (const double v : values) {
    if (!std::isfinite(v)) throw DomainError("cannot extrapolate a non-finite series");
  }
  const double last = values[size - 1];
  const double d1 = values[size - 3] - values[size - 4];
  const double d2 = values[size - 2] - values[size - 3];
  const double d3 = last - values[size - 2];

  ExtrapolationResult result;
  result.limit_estimate = last;
  result.residual_tail = std::abs(d3);
  result.monotone_tail = (d1 >= 0.0 && d2 >= 0.0 && d3 >= 0.0) ||
                         (d1 <= 0.0 && d2 <= 0.0 && d3 <= 0.0);
  if (!result.monotone_tail) return result;

  const std::vector<std::optional<double>> rates = successive_rates(values);
  double rate_sum = 0.0;
  int used = 0;
  for (std::size_t m = size - 1; m >= 2 && used < kRateWindow && rates[m]; --m) {
    rate_sum += *rates[m];
    ++used;
  }
  if (used == 0) return result;
  const double rate = rate_sum / used;
  result.rate_estimate = rate;
  result.limit_estimate = last + d3 / (std::exp2(rate) - 1.0);
  return result;
}

ExtrapolationResult extrapolate(const ConvergenceSeries& series) {
  series.validate();
  return extrapolate(series_values(series));
}

std::optional<double> expected_limit(OperatorKind kind, const Function1D& f, double x, int j,
                                     DerivativePolicy policy) {
  switch (kind) {
    case OperatorKind::bernstein_1d: return classical_rhs_1d(f, x, policy);
    case OperatorKind::akr_1d:
      if (j != 2) return std::nullopt;
      return voronovskaja_rhs_1d(f, x, policy);
    case OperatorKind::lemma_sum: return 0.0;
    default:
      throw DomainError("operator kind " + std::string(to_string(kind)) +
                        " does not take a 1D function");
  }
}

std::optional<double> expected_limit(OperatorKind kind, const Function2D& f, SquarePoint p, int j,
                                     DerivativePolicy policy) {
  switch (kind) {
    case OperatorKind::bernstein_2d: return classical_rhs_2d(f, p, policy);
    case OperatorKind::akr_2d:
      if (j != 2) return std::nullopt;
      return voronovskaja_rhs_2d(f, p, policy);
    case OperatorKind::akr_minus_bernstein_2d:
      if (j != 2) return std::nullopt;
      return drift_2d(f, p, policy);
    default:
      throw DomainError("operator kind " + std::string(to_string(kind)) +
                        " does not take a 2D function");
  }
}

}  // namespace akr

#include "akr/derivatives.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace akr {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double first_step(double c) { return std::cbrt(kEps) * std::max(1.0, std::abs(c)); }
double second_step(double c) { return std::sqrt(std::sqrt(kEps)) * std::max(1.0, std::abs(c)); }

// Derivative ≈ (1/h^order) * sum_i coeff[i] * f(c + offset[i] * h).
struct Stencil {
  std::array<double, 4> offset{};
  std::array<double, 4> coeff{};
  int size = 0;
  int order = 1;
  double h = 0.0;
};

Stencil first_derivative_stencil(double c, double h) {
  if (c - h >= 0.0 && c + h <= 1.0) return {{-1, 1}, {-0.5, 0.5}, 2, 1, h};
  if (c + 2 * h <= 1.0) return {{0, 1, 2}, {-1.5, 2.0, -0.5}, 3, 1, h};
  return {{0, -1, -2}, {1.5, -2.0, 0.5}, 3, 1, h};
}

Stencil second_derivative_stencil(double c, double h) {
  if (c - h >= 0.0 && c + h <= 1.0) return {{-1, 0, 1}, {1.0, -2.0, 1.0}, 3, 2, h};
  if (c + 3 * h <= 1.0) return {{0, 1, 2, 3}, {2.0, -5.0, 4.0, -1.0}, 4, 2, h};
  return {{0, -1, -2, -3}, {2.0, -5.0, 4.0, -1.0}, 4, 2, h};
}

template <class Eval>
double apply(const Stencil& s, double c, Eval&& eval) {
  double acc = 0.0;
  for (int i = 0; i < s.size; ++i) acc += s.coeff[i] * eval(c + s.offset[i] * s.h);
  return s.order == 1 ? acc / s.h : acc / (s.h * s.h);
}

}  // namespace

Derivatives1D finite_difference_derivatives(const RealMap1D& f, double x, DerivativeOrder order) {
  require_unit_interval(x, "x");
  Derivatives1D out;
  out.d1 = apply(first_derivative_stencil(x, first_step(x)), x, f);
  if (order == DerivativeOrder::second) {
    out.d2 = apply(second_derivative_stencil(x, second_step(x)), x, f);
  }
  return out;
}

Partials2D finite_difference_partials(const RealMap2D& f, SquarePoint p, DerivativeOrder order) {
  const double x = p.x();
  const double y = p.y();
  Partials2D out;
  out.fx = apply(first_derivative_stencil(x, first_step(x)), x,
                 [&](double s) { return f(s, y); });
  out.fy = apply(first_derivative_stencil(y, first_step(y)), y,
                 [&](double t) { return f(x, t); });
  if (order == DerivativeOrder::second) {
    out.fxx = apply(second_derivative_stencil(x, second_step(x)), x,
                    [&](double s) { return f(s, y); });
    out.fyy = apply(second_derivative_stencil(y, second_step(y)), y,
                    [&](double t) { return f(x, t); });
    // Nested first-derivative stencils; central x central is the cross stencil.
    const Stencil sx = first_derivative_stencil(x, second_step(x));
    const Stencil sy = first_derivative_stencil(y, second_step(y));
    out.fxy = apply(sx, x, [&](double s) {
      return apply(sy, y, [&](double t) { return f(s, t); });
    });
  }
  return out;
}

Function1D with_finite_difference_fallback(Function1D f) {
  const RealMap1D eval = f.eval;
  if (!f.d1) {
    f.d1 = [eval](double x) {
      return finite_difference_derivatives(eval, x, DerivativeOrder::first).d1;
    };
  }
  if (!f.d2) {
    f.d2 = [eval](double x) {
      return *finite_difference_derivatives(eval, x, DerivativeOrder::second).d2;
    };
  }
  return f;
}

Function2D with_finite_difference_fallback(Function2D f) {
  const RealMap2D eval = f.eval;
  auto partial = [eval](DerivativeOrder order, auto field) {
    return [eval, order, field](double s, double t) {
      const Partials2D d = finite_difference_partials(eval, SquarePoint(s, t), order);
      return field(d);
    };
  };
  if (!f.fx) f.fx = partial(DerivativeOrder::first, [](const Partials2D& d) { return d.fx; });
  if (!f.fy) f.fy = partial(DerivativeOrder::first, [](const Partials2D& d) { return d.fy; });
  if (!f.fxx) f.fxx = partial(DerivativeOrder::second, [](const Partials2D& d) { return *d.fxx; });
  if (!f.fxy) f.fxy = partial(DerivativeOrder::second, [](const Partials2D& d) { return *d.fxy; });
  if (!f.fyy) f.fyy = partial(DerivativeOrder::second, [](const Partials2D& d) { return *d.fyy; });
  return f;
}

}  // namespace akr

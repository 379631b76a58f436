#pragma once

/**
 * @file derivatives.hpp
 * @brief Finite-difference derivatives on [0,1] and [0,1]^2.
 *
 * First derivatives use step h1 = eps^(1/3), second derivatives (including
 * the mixed partial) h2 = eps^(1/4), each scaled by max(1, |coordinate|).
 * Central stencils are used when the point is at least the required distance
 * from the boundary of the domain; otherwise second-order one-sided stencils
 * pointing into the domain.
 */

#include <optional>

#include "akr/function.hpp"

namespace akr {

enum class DerivativeOrder { first = 1, second = 2 };

struct Derivatives1D {
  double d1 = 0.0;
  std::optional<double> d2;  // set for DerivativeOrder::second
};

struct Partials2D {
  double fx = 0.0;
  double fy = 0.0;
  std::optional<double> fxx;  // second-order fields set for DerivativeOrder::second
  std::optional<double> fxy;
  std::optional<double> fyy;
};

[[nodiscard]] Derivatives1D finite_difference_derivatives(const RealMap1D& f, double x,
                                                          DerivativeOrder order);

/// Partials of an evaluation-only function; fxy from the 4-point cross
/// stencil when both coordinates are interior.
[[nodiscard]] Partials2D finite_difference_partials(const RealMap2D& f, SquarePoint p,
                                                    DerivativeOrder order);

/// Copy of `f` whose missing d1/d2 are filled by finite differences.
[[nodiscard]] Function1D with_finite_difference_fallback(Function1D f);

/// Copy of `f` whose missing partials are filled by finite differences.
[[nodiscard]] Function2D with_finite_difference_fallback(Function2D f);

}  // namespace akr

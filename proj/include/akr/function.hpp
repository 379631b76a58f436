#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>

namespace akr {

using RealMap1D = std::function<double(double)>;
using RealMap2D = std::function<double(double, double)>;

/// Real function on [0,1] with optional exact first and second derivatives.
struct Function1D {
  RealMap1D eval;
  RealMap1D d1;  // empty when unknown
  RealMap1D d2;

  [[nodiscard]] double operator()(double t) const { return eval(t); }
  [[nodiscard]] bool has_d1() const noexcept { return static_cast<bool>(d1); }
  [[nodiscard]] bool has_d2() const noexcept { return static_cast<bool>(d2); }
};

/// Sup-norms of the second partials over the unit square.
struct SecondPartialBounds {
  double xx = 0.0;
  double xy = 0.0;
  double yy = 0.0;
};

/// f(s,t) = g(s) h(t).
struct SeparableFactors {
  Function1D g;
  Function1D h;
};

/// Real function on [0,1]^2 with optional exact partials.
///
/// `factors`, when set, declares that eval(s,t) == g(s) * h(t); the tensor
/// operators then use the product of two 1D sums instead of the double sum.
struct Function2D {
  RealMap2D eval;
  RealMap2D fx;
  RealMap2D fy;
  RealMap2D fxx;
  RealMap2D fxy;
  RealMap2D fyy;
  std::optional<SecondPartialBounds> sup_bounds;
  std::shared_ptr<const SeparableFactors> factors;

  [[nodiscard]] double operator()(double s, double t) const { return eval(s, t); }
  [[nodiscard]] bool has_first_partials() const noexcept { return fx && fy; }
  [[nodiscard]] bool has_second_partials() const noexcept { return fxx && fxy && fyy; }
  [[nodiscard]] bool separable() const noexcept { return factors != nullptr; }

  /// Copy with the separability declaration dropped, forcing the double sum.
  [[nodiscard]] Function2D without_factors() const {
    Function2D copy = *this;
    copy.factors.reset();
    return copy;
  }
};

/// Point of the closed unit square.
class SquarePoint {
 public:
  /// Throws DomainError unless both coordinates lie in [0,1].
  SquarePoint(double x, double y);

  [[nodiscard]] double x() const noexcept { return x_; }
  [[nodiscard]] double y() const noexcept { return y_; }

  friend bool operator==(const SquarePoint&, const SquarePoint&) = default;

 private:
  double x_;
  double y_;
};

/// Short human-readable rendering of a real for error messages.
[[nodiscard]] std::string describe_real(double x);

/// Throws DomainError naming `what` unless 0 <= x <= 1.
void require_unit_interval(double x, const char* what);

}  // namespace akr

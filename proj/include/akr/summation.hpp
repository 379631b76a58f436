#pragma once

#include <cmath>

namespace akr {

/// Neumaier's variant of Kahan summation. Terms must be added in a fixed
/// order for results to be reproducible.
class CompensatedSum {
 public:
  constexpr CompensatedSum() = default;
  constexpr explicit CompensatedSum(double init) : sum_(init) {}

  constexpr void add(double term) noexcept {
    const double t = sum_ + term;
    if (std::abs(sum_) >= std::abs(term)) {
      comp_ += (sum_ - t) + term;
    } else {
      comp_ += (term - t) + sum_;
    }
    sum_ = t;
  }

  constexpr CompensatedSum& operator+=(double term) noexcept {
    add(term);
    return *this;
  }

  [[nodiscard]] constexpr double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Unevaluated sum hi + lo with |lo| <= ulp(hi) / 2.
struct DoubleDouble {
  double hi = 0.0;
  double lo = 0.0;

  [[nodiscard]] constexpr double value() const noexcept { return hi + lo; }
};

/// Knuth's TwoSum: a + b == s + e exactly.
[[nodiscard]] constexpr DoubleDouble two_sum(double a, double b) noexcept {
  const double s = a + b;
  const double bb = s - a;
  const double e = (a - (s - bb)) + (b - bb);
  return {s, e};
}

/// a * b == p + e exactly (requires a correctly rounded fma).
[[nodiscard]] inline DoubleDouble two_prod(double a, double b) noexcept {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

[[nodiscard]] constexpr DoubleDouble operator+(DoubleDouble a, DoubleDouble b) noexcept {
  const DoubleDouble s = two_sum(a.hi, b.hi);
  const double lo = s.lo + a.lo + b.lo;
  return two_sum(s.hi, lo);
}

[[nodiscard]] constexpr DoubleDouble operator-(DoubleDouble a) noexcept { return {-a.hi, -a.lo}; }

[[nodiscard]] constexpr DoubleDouble operator-(DoubleDouble a, DoubleDouble b) noexcept {
  return a + (-b);
}

}  // namespace akr

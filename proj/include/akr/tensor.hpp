#pragma once

#include "akr/akr.hpp"
#include "akr/bernstein.hpp"
#include "akr/function.hpp"

namespace akr {

/// How a tensor-product operator evaluates its double sum.
enum class TensorPath {
  automatic,   ///< product of two 1D sums when f declares separable factors
  double_sum,  ///< always the explicit (n+1)^2 loop
};

/// B_n^{[2]} f(p) = sum_k sum_l f(k/n, l/n) p_{n,k}(x) p_{n,l}(y).
[[nodiscard]] double tensor_bernstein_apply(const Function2D& f, int n, SquarePoint p,
                                            TensorPath path = TensorPath::automatic);

/// B_{n,j}^{[2]} f(p) = sum_k sum_l f(t_k, t_l) p_{n,k}(x) p_{n,l}(y), one
/// node table shared by both axes.
[[nodiscard]] double tensor_akr_apply(const Function2D& f, int n, int j, SquarePoint p,
                                      TensorPath path = TensorPath::automatic);

/// B_{n,j}^{[2]} f(p) - B_n^{[2]} f(p), accumulated term by term as
/// sum_k sum_l p_{n,k}(x) p_{n,l}(y) [f(t_k, t_l) - f(k/n, l/n)].
[[nodiscard]] double tensor_akr_minus_bernstein(const Function2D& f, int n, int j, SquarePoint p,
                                                TensorPath path = TensorPath::automatic);

namespace detail {

/// sum_k wx[k] * (sum_l wy[l] * term(k, l)), k outer and l inner, both
/// levels compensated. Rows and columns with an exactly zero weight are
/// skipped.
template <class Term>
double tensor_sum(std::span<const double> wx, std::span<const double> wy, Term&& term) {
  CompensatedSum outer;
  const auto size = static_cast<int>(wx.size());
  for (int k = 0; k < size; ++k) {
    if (wx[k] == 0.0) continue;
    CompensatedSum inner;
    for (int l = 0; l < size; ++l) {
      if (wy[l] == 0.0) continue;
      inner.add(term(k, l) * wy[l]);
    }
    outer.add(inner.value() * wx[k]);
  }
  return outer.value();
}

}  // namespace detail

}  // namespace akr

#pragma once

/**
 * @file akr.hpp
 * @brief AKR operators on [0,1].
 *
 * For j >= 2 and n >= j the operator keeps the Bernstein weights but samples
 * f at the nodes
 *
 *     t_{n,k}^j = ( k(k-1)...(k-j+1) / (n(n-1)...(n-j+1)) )^(1/j),
 *
 * which makes e_0 = 1 and e_j = t^j fixed points. For j = 2 the nodes differ
 * from k/n by
 *
 *     k/n - t_{n,k}^2 = 1/(2n) - k/(2n^2) + R(n,k),
 *
 * and R(n,k) drives the asymptotic analysis in asymptotics.hpp.
 */

#include <span>
#include <vector>

#include "akr/bernstein.hpp"
#include "akr/function.hpp"

namespace akr {

/// t_{n,k}^j. Exactly 0 for k < j and exactly 1 for k = n.
/// Throws DomainError unless 2 <= j <= n and 0 <= k <= n.
[[nodiscard]] double akr_node(int n, int k, int j);

/// The n+1 nodes t_{n,0}^j..t_{n,n}^j for a fixed (n, j).
class NodeTable {
 public:
  NodeTable(int n, int j);

  [[nodiscard]] int degree() const noexcept { return n_; }
  [[nodiscard]] int order() const noexcept { return j_; }
  [[nodiscard]] std::span<const double> nodes() const noexcept { return nodes_; }
  [[nodiscard]] double operator[](int k) const { return nodes_.at(static_cast<std::size_t>(k)); }

 private:
  int n_;
  int j_;
  std::vector<double> nodes_;
};

[[nodiscard]] NodeTable build_node_table(int n, int j);

/// R(n,k) = k/n - sqrt(k(k-1)/(n(n-1))) - 1/(2n) + k/(2n^2), evaluated term
/// by term (independently of akr_node). Defined for j = 2 only.
[[nodiscard]] double remainder_R(int n, int k);

/// sum_k f(t_{n,k}^j) p_{n,k}(x), ascending k, compensated.
[[nodiscard]] double akr_apply(const Function1D& f, int n, int j, double x);

[[nodiscard]] double akr_apply(const Function1D& f, const NodeTable& nodes,
                               const BasisContext& ctx, double x);

/// Largest of |B_{n,j} e_0 - 1| and |B_{n,j} e_j - x^j| over grid_size
/// equally spaced points of [0,1] (endpoints included).
[[nodiscard]] double fixed_point_error(int n, int j, int grid_size);

}  // namespace akr

#include "akr/akr.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "akr/errors.hpp"
#include "akr/summation.hpp"

namespace akr {

namespace {

void check_degree_and_order(int n, int j) {
  if (j < 2) {
    throw DomainError("AKR order j must be >= 2, got " + std::to_string(j));
  }
  if (n < j) {
    throw DomainError("AKR degree n=" + std::to_string(n) + " must be >= j=" + std::to_string(j));
  }
}

// Assumes validated arguments.
double node_unchecked(int n, int k, int j) {
  if (k < j) return 0.0;
  if (k == n) return 1.0;
  // ln((k-i)/(n-i)) = log1p(-(n-k)/(n-i)): accurate when k is close to n.
  double log_ratio = 0.0;
  for (int i = 0; i < j; ++i) {
    log_ratio += std::log1p(-static_cast<double>(n - k) / static_cast<double>(n - i));
  }
  return std::exp(log_ratio / j);
}

double power(double t, int j) {
  double r = 1.0;
  for (int i = 0; i < j; ++i) r *= t;
  return r;
}

}  // namespace

double akr_node(int n, int k, int j) {
  check_degree_and_order(n, j);
  if (k < 0 || k > n) {
    throw DomainError("node index k=" + std::to_string(k) + " outside [0," + std::to_string(n) +
                      "]");
  }
  return node_unchecked(n, k, j);
}

NodeTable::NodeTable(int n, int j) : n_(n), j_(j) {
  check_degree_and_order(n, j);
  nodes_.resize(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) nodes_[k] = node_unchecked(n, k, j);
}

NodeTable build_node_table(int n, int j) { return NodeTable(n, j); }

double remainder_R(int n, int k) {
  if (n < 2) {
    throw DomainError("R(n,k) needs n >= 2, got n=" + std::to_string(n));
  }
  if (k < 0 || k > n) {
    throw DomainError("R(n,k) index k=" + std::to_string(k) + " outside [0," +
                      std::to_string(n) + "]");
  }
  const double nn = n;
  const double kk = k;
  const double root = std::sqrt((kk * (kk - 1.0)) / (nn * (nn - 1.0)));
  return ((kk / nn - root) - 1.0 / (2.0 * nn)) + kk / (2.0 * nn * nn);
}

double akr_apply(const Function1D& f, const NodeTable& nodes, const BasisContext& ctx, double x) {
  const int n = nodes.degree();
  if (ctx.degree() != n) {
    throw DomainError("node table and basis context disagree on the degree");
  }
  const std::vector<double> w = ctx.weights(x);
  CompensatedSum acc;
  for (int k = 0; k <= n; ++k) {
    if (w[k] == 0.0) continue;
    acc.add(f(nodes[k]) * w[k]);
  }
  return acc.value();
}

double akr_apply(const Function1D& f, int n, int j, double x) {
  const NodeTable nodes(n, j);
  return akr_apply(f, nodes, BasisContext(n), x);
}

double fixed_point_error(int n, int j, int grid_size) {
  check_degree_and_order(n, j);
  if (grid_size < 2) {
    throw DomainError("grid_size must be >= 2");
  }
  const NodeTable nodes(n, j);
  const BasisContext ctx(n);
  const Function1D e0{[](double) { return 1.0; }, {}, {}};
  const Function1D ej{[j](double t) { return power(t, j); }, {}, {}};
  double worst = 0.0;
  for (int i = 0; i < grid_size; ++i) {
    const double x = static_cast<double>(i) / (grid_size - 1);
    worst = std::max(worst, std::abs(akr_apply(e0, nodes, ctx, x) - 1.0));
    worst = std::max(worst, std::abs(akr_apply(ej, nodes, ctx, x) - power(x, j)));
  }
  return worst;
}

}  // namespace akr

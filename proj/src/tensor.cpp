#include "akr/tensor.hpp"

#include <string>
#include <vector>

#include "akr/errors.hpp"

namespace akr {

namespace {

void check_tensor_degree(int n) {
  if (n < 1) {
    throw DomainError("tensor Bernstein degree must be >= 1, got " + std::to_string(n));
  }
}

std::vector<double> uniform_nodes(int n) {
  std::vector<double> u(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) u[k] = static_cast<double>(k) / n;
  return u;
}

double sum_1d(const Function1D& g, std::span<const double> nodes, std::span<const double> w) {
  CompensatedSum acc;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (w[k] == 0.0) continue;
    acc.add(g(nodes[k]) * w[k]);
  }
  return acc.value();
}

double apply_on_nodes(const Function2D& f, std::span<const double> nodes, const BasisContext& ctx,
                      SquarePoint p, TensorPath path) {
  const std::vector<double> wx = ctx.weights(p.x());
  const std::vector<double> wy = ctx.weights(p.y());
  if (path == TensorPath::automatic && f.separable()) {
    return sum_1d(f.factors->g, nodes, wx) * sum_1d(f.factors->h, nodes, wy);
  }
  return detail::tensor_sum(wx, wy, [&](int k, int l) { return f(nodes[k], nodes[l]); });
}

}  // namespace

double tensor_bernstein_apply(const Function2D& f, int n, SquarePoint p, TensorPath path) {
  check_tensor_degree(n);
  return apply_on_nodes(f, uniform_nodes(n), BasisContext(n), p, path);
}

double tensor_akr_apply(const Function2D& f, int n, int j, SquarePoint p, TensorPath path) {
  const NodeTable nodes(n, j);
  return apply_on_nodes(f, nodes.nodes(), BasisContext(n), p, path);
}

double tensor_akr_minus_bernstein(const Function2D& f, int n, int j, SquarePoint p,
                                  TensorPath path) {
  const NodeTable nodes(n, j);
  const std::vector<double> u = uniform_nodes(n);
  const BasisContext ctx(n);
  const std::vector<double> wx = ctx.weights(p.x());
  const std::vector<double> wy = ctx.weights(p.y());
  const auto t = nodes.nodes();
  if (path == TensorPath::automatic && f.separable()) {
    const auto& [g, h] = *f.factors;
    return sum_1d(g, t, wx) * sum_1d(h, t, wy) - sum_1d(g, u, wx) * sum_1d(h, u, wy);
  }
  return detail::tensor_sum(wx, wy, [&](int k, int l) { return f(t[k], t[l]) - f(u[k], u[l]); });
}

}  // namespace akr

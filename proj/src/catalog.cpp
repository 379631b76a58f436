#include "akr/catalog.hpp"

#include <cmath>
#include <numbers>
#include <regex>
#include <string>

#include "akr/errors.hpp"

namespace akr {

namespace {

constexpr int kMaxMonomialDegree = 32;

// c * t^e, with t^0 == 1 and a zero coefficient short-circuiting negative e.
double scaled_power(double c, double t, int e) {
  if (c == 0.0) return 0.0;
  double r = c;
  for (int i = 0; i < e; ++i) r *= t;
  return r;
}

Function1D power_function(int p) {
  return {[p](double t) { return scaled_power(1.0, t, p); },
          [p](double t) { return scaled_power(p, t, p - 1); },
          [p](double t) { return scaled_power(static_cast<double>(p) * (p - 1), t, p - 2); }};
}

CatalogEntry one_dimensional(std::string name, int p) {
  CatalogEntry e;
  e.name = std::move(name);
  e.arity = 1;
  e.function = power_function(p);
  e.sup_bounds = {static_cast<double>(p) * (p - 1), 0.0, 0.0};
  return e;
}

CatalogEntry separable_entry(std::string name, Function1D g, Function1D h,
                             SecondPartialBounds bounds) {
  Function2D f;
  f.eval = [g = g.eval, h = h.eval](double s, double t) { return g(s) * h(t); };
  f.fx = [g = g.d1, h = h.eval](double s, double t) { return g(s) * h(t); };
  f.fy = [g = g.eval, h = h.d1](double s, double t) { return g(s) * h(t); };
  f.fxx = [g = g.d2, h = h.eval](double s, double t) { return g(s) * h(t); };
  f.fxy = [g = g.d1, h = h.d1](double s, double t) { return g(s) * h(t); };
  f.fyy = [g = g.eval, h = h.d2](double s, double t) { return g(s) * h(t); };
  f.sup_bounds = bounds;
  f.factors = std::make_shared<const SeparableFactors>(SeparableFactors{std::move(g), std::move(h)});

  CatalogEntry e;
  e.name = std::move(name);
  e.arity = 2;
  e.function = std::move(f);
  e.sup_bounds = bounds;
  e.separable = true;
  return e;
}

CatalogEntry monomial(int p, int q) {
  const SecondPartialBounds bounds{static_cast<double>(p) * (p - 1), static_cast<double>(p) * q,
                                   static_cast<double>(q) * (q - 1)};
  return separable_entry("monomial(" + std::to_string(p) + "," + std::to_string(q) + ")",
                         power_function(p), power_function(q), bounds);
}

CatalogEntry exp_sum() {
  const auto exp = [](double t) { return std::exp(t); };
  const Function1D e{exp, exp, exp};
  // Every partial is e^{s+t} <= e^2 on the square.
  const double m = std::exp(2.0);
  CatalogEntry entry = separable_entry("exp-sum", e, e, {m, m, m});
  // e^{s+t} directly rather than e^s * e^t.
  auto& f = std::get<Function2D>(entry.function);
  const auto direct = [](double s, double t) { return std::exp(s + t); };
  f.eval = f.fx = f.fy = f.fxx = f.fxy = f.fyy = direct;
  return entry;
}

CatalogEntry sin_cos() {
  using std::numbers::pi;
  const Function1D g{[](double s) { return std::sin(pi * s); },
                     [](double s) { return pi * std::cos(pi * s); },
                     [](double s) { return -pi * pi * std::sin(pi * s); }};
  const Function1D h{[](double t) { return std::cos(pi * t); },
                     [](double t) { return -pi * std::sin(pi * t); },
                     [](double t) { return -pi * pi * std::cos(pi * t); }};
  return separable_entry("sinpix-cospiy", g, h, {pi * pi, pi * pi, pi * pi});
}

// 1 / (1 + 25 (s - 1/2)^2 + 25 (t - 1/2)^2)
CatalogEntry runge_2d() {
  const auto denom = [](double s, double t) {
    const double u = s - 0.5;
    const double v = t - 0.5;
    return 1.0 + 25.0 * (u * u + v * v);
  };
  Function2D f;
  f.eval = [denom](double s, double t) { return 1.0 / denom(s, t); };
  f.fx = [denom](double s, double t) {
    const double d = denom(s, t);
    return -50.0 * (s - 0.5) / (d * d);
  };
  f.fy = [denom](double s, double t) {
    const double d = denom(s, t);
    return -50.0 * (t - 0.5) / (d * d);
  };
  f.fxx = [denom](double s, double t) {
    const double d = denom(s, t);
    const double u = s - 0.5;
    return -50.0 / (d * d) + 5000.0 * u * u / (d * d * d);
  };
  f.fxy = [denom](double s, double t) {
    const double d = denom(s, t);
    return 5000.0 * (s - 0.5) * (t - 0.5) / (d * d * d);
  };
  f.fyy = [denom](double s, double t) {
    const double d = denom(s, t);
    const double v = t - 0.5;
    return -50.0 / (d * d) + 5000.0 * v * v / (d * d * d);
  };
  // |f_xx| peaks at the centre (50); |f_xy| at 25u^2 = 25v^2 = 1/4 (400/27).
  f.sup_bounds = SecondPartialBounds{50.0, 400.0 / 27.0, 50.0};

  CatalogEntry e;
  e.name = "runge-2d";
  e.arity = 2;
  e.sup_bounds = *f.sup_bounds;
  e.function = std::move(f);
  return e;
}

std::string valid_names() {
  std::string out;
  for (const auto& n : catalog_names()) {
    if (!out.empty()) out += ", ";
    out += n;
  }
  return out;
}

}  // namespace

const Function1D& CatalogEntry::function1d() const {
  if (const auto* f = std::get_if<Function1D>(&function)) return *f;
  throw LookupError("catalog function '" + name + "' has arity 2, a 1D function was requested");
}

const Function2D& CatalogEntry::function2d() const {
  if (const auto* f = std::get_if<Function2D>(&function)) return *f;
  throw LookupError("catalog function '" + name + "' has arity 1, a 2D function was requested");
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{
      "const1", "e1", "e2", "e3", "monomial(p,q)", "exp-sum", "sinpix-cospiy", "runge-2d"};
  return names;
}

CatalogEntry lookup(std::string_view name) {
  if (name == "const1") return one_dimensional("const1", 0);
  if (name == "e1") return one_dimensional("e1", 1);
  if (name == "e2") return one_dimensional("e2", 2);
  if (name == "e3") return one_dimensional("e3", 3);
  if (name == "exp-sum") return exp_sum();
  if (name == "sinpix-cospiy") return sin_cos();
  if (name == "runge-2d") return runge_2d();

  static const std::regex monomial_re(R"(monomial\(\s*(\d{1,3})\s*,\s*(\d{1,3})\s*\))");
  std::match_results<std::string_view::const_iterator> match;
  if (std::regex_match(name.begin(), name.end(), match, monomial_re)) {
    const int p = std::stoi(match[1].str());
    const int q = std::stoi(match[2].str());
    if (p > kMaxMonomialDegree || q > kMaxMonomialDegree) {
      throw LookupError("monomial degrees must be <= " + std::to_string(kMaxMonomialDegree));
    }
    return monomial(p, q);
  }
  throw LookupError("unknown function '" + std::string(name) + "'; valid names: " +
                    valid_names());
}

}  // namespace akr

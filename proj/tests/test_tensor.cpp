#include <doctest.h>

#include <cmath>
#include <vector>

#include "akr/akr.hpp"
#include "akr/bernstein.hpp"
#include "akr/catalog.hpp"
#include "akr/errors.hpp"
#include "akr/tensor.hpp"

using akr::Function1D;
using akr::Function2D;
using akr::SquarePoint;
using akr::TensorPath;

namespace {

Function2D fn2(akr::RealMap2D f) {
  Function2D out;
  out.eval = std::move(f);
  return out;
}

double power(double t, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= t;
  return r;
}

}  // namespace

TEST_CASE("tensor_bernstein_apply examples") {
  const Function2D one = fn2([](double, double) { return 1.0; });
  const Function2D st = fn2([](double s, double t) { return s * t; });
  const Function2D s2 = fn2([](double s, double) { return s * s; });
  CHECK(std::abs(akr::tensor_bernstein_apply(one, 16, {0.3, 0.7}) - 1.0) <= 1e-15);
  CHECK(std::abs(akr::tensor_bernstein_apply(st, 8, {0.4, 0.6}) - 0.24) <= 1e-13);

  // Brute-force 9-term sum: only the s-weights matter and they give 0.375.
  double brute = 0.0;
  const double w[] = {0.25, 0.5, 0.25};
  for (int k = 0; k <= 2; ++k)
    for (int l = 0; l <= 2; ++l) brute += (k / 2.0) * (k / 2.0) * w[k] * w[l];
  CHECK(brute == 0.375);
  CHECK(akr::tensor_bernstein_apply(s2, 2, {0.5, 0.5}) == doctest::Approx(brute).epsilon(1e-15));
  CHECK_THROWS_AS((void)akr::tensor_bernstein_apply(one, 0, {0.5, 0.5}), akr::DomainError);
}

TEST_CASE("tensor_akr_apply examples") {
  const Function2D one = fn2([](double, double) { return 1.0; });
  const Function2D st = fn2([](double s, double t) { return s * t; });
  const Function2D s2 = fn2([](double s, double) { return s * s; });
  CHECK(std::abs(akr::tensor_akr_apply(s2, 32, 2, {0.4, 0.9}) - 0.16) <= 1e-12);
  for (const auto& [x, y] : {std::pair{0.0, 0.0}, {0.2, 0.9}, {1.0, 0.5}}) {
    CHECK(std::abs(akr::tensor_akr_apply(one, 8, 2, {x, y}) - 1.0) <= 1e-15);
  }
  CHECK(akr::tensor_akr_apply(st, 2, 2, {0.5, 0.5}) == doctest::Approx(0.0625).epsilon(1e-15));
  CHECK_THROWS_AS((void)akr::tensor_akr_apply(one, 2, 3, {0.5, 0.5}), akr::DomainError);
}

TEST_CASE("square points are validated") {
  CHECK_THROWS_AS(SquarePoint(-0.1, 0.5), akr::DomainError);
  CHECK_THROWS_AS(SquarePoint(0.5, 1.01), akr::DomainError);
  CHECK_NOTHROW(SquarePoint(0.0, 1.0));
}

TEST_CASE("separable functions factor through the 1D operators") {
  const std::vector<Function1D> factors{
      {[](double t) { return t; }, {}, {}},
      {[](double t) { return t * t * t; }, {}, {}},
      {[](double t) { return std::exp(t); }, {}, {}},
      {[](double t) { return std::sin(3 * t) + 2; }, {}, {}},
      {[](double t) { return 1.0 / (1.0 + 4 * t * t); }, {}, {}},
  };
  const std::vector<SquarePoint> points{{0.1, 0.8}, {0.5, 0.5}, {0.93, 0.27}};
  for (std::size_t a = 0; a < factors.size(); ++a) {
    for (std::size_t b = 0; b < factors.size(); ++b) {
      const auto& g = factors[a];
      const auto& h = factors[b];
      const Function2D f = fn2([&](double s, double t) { return g(s) * h(t); });
      for (const int n : {2, 5, 16, 64, 256}) {
        for (const SquarePoint p : points) {
          const double product = akr::akr_apply(g, n, 2, p.x()) * akr::akr_apply(h, n, 2, p.y());
          CHECK(std::abs(akr::tensor_akr_apply(f, n, 2, p) - product) <= 1e-12);
          const double bernstein = akr::bernstein_apply(g, n, p.x()) * akr::bernstein_apply(h, n, p.y());
          CHECK(std::abs(akr::tensor_bernstein_apply(f, n, p) - bernstein) <= 1e-12);
        }
      }
    }
  }
}

TEST_CASE("separable fast path agrees with the double sum") {
  for (const char* name : {"exp-sum", "sinpix-cospiy", "monomial(3,2)"}) {
    const Function2D f = akr::lookup(name).function2d();
    REQUIRE(f.separable());
    for (const int n : {3, 40, 300}) {
      const SquarePoint p(0.35, 0.8);
      CHECK(akr::tensor_akr_apply(f, n, 2, p) ==
            doctest::Approx(akr::tensor_akr_apply(f, n, 2, p, TensorPath::double_sum)).epsilon(1e-13));
      CHECK(akr::tensor_bernstein_apply(f, n, p) ==
            doctest::Approx(akr::tensor_bernstein_apply(f, n, p, TensorPath::double_sum)).epsilon(1e-13));
      CHECK(std::abs(akr::tensor_akr_minus_bernstein(f, n, 2, p) -
                     akr::tensor_akr_minus_bernstein(f, n, 2, p, TensorPath::double_sum)) <= 1e-13);
    }
  }
}

TEST_CASE("partition of unity on the square up to n = 1024") {
  const Function2D one = fn2([](double, double) { return 1.0; });
  for (const int n : {1, 2, 7, 64, 333, 1024}) {
    for (const SquarePoint p : {SquarePoint{0.0, 0.0}, SquarePoint{0.25, 0.75}, SquarePoint{0.5, 1.0}}) {
      CHECK(std::abs(akr::tensor_bernstein_apply(one, n, p) - 1.0) <= 1e-12);
      if (n >= 2) CHECK(std::abs(akr::tensor_akr_apply(one, n, 2, p) - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("tensor AKR reproduces e_0 and e_j in each variable") {
  for (const int j : {2, 3}) {
    const Function2D fixed[] = {
        fn2([](double, double) { return 1.0; }),
        fn2([j](double s, double) { return power(s, j); }),
        fn2([j](double, double t) { return power(t, j); }),
        fn2([j](double s, double t) { return power(s, j) * power(t, j); }),
    };
    const auto exact = [j](int which, double x, double y) {
      switch (which) {
        case 0: return 1.0;
        case 1: return power(x, j);
        case 2: return power(y, j);
        default: return power(x, j) * power(y, j);
      }
    };
    for (const int n : {j, 10, 77, 256}) {
      for (const SquarePoint p : {SquarePoint{0.1, 0.6}, SquarePoint{0.85, 0.45}}) {
        for (int which = 0; which < 4; ++which) {
          CHECK(std::abs(akr::tensor_akr_apply(fixed[which], n, j, p) - exact(which, p.x(), p.y())) <= 1e-12);
        }
      }
    }
  }
}

TEST_CASE("difference operator matches the two separate sums") {
  const Function2D f = akr::lookup("runge-2d").function2d();
  for (const int n : {2, 9, 128}) {
    const SquarePoint p(0.3, 0.65);
    const double direct = akr::tensor_akr_apply(f, n, 2, p) - akr::tensor_bernstein_apply(f, n, p);
    CHECK(std::abs(akr::tensor_akr_minus_bernstein(f, n, 2, p) - direct) <= 1e-14);
  }
}

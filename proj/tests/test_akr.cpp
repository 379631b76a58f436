#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "akr/akr.hpp"
#include "akr/errors.hpp"
#include "oracles.hpp"

using akr::Function1D;

namespace {

double ulp(double v) {
  v = std::abs(v);
  return std::nextafter(v, std::numeric_limits<double>::infinity()) - v;
}

}  // namespace

TEST_CASE("akr_node examples") {
  CHECK(akr::akr_node(2, 1, 2) == 0.0);
  CHECK(akr::akr_node(5, 5, 2) == 1.0);
  const double ref = oracle::to_double(boost::multiprecision::sqrt(oracle::Real(2) / 12));
  CHECK(std::abs(akr::akr_node(4, 2, 2) - ref) <= 1e-15);
  CHECK(akr::akr_node(4, 2, 2) == doctest::Approx(0.4082483).epsilon(1e-7));
}

TEST_CASE("akr_node matches the 50-digit oracle for several orders") {
  for (const int j : {2, 3, 4, 7}) {
    for (const int n : {j, j + 1, 10, 57, 512}) {
      if (n < j) continue;
      for (int k = 0; k <= n; ++k) {
        const double ref = oracle::to_double(oracle::node(n, k, j));
        CHECK(std::abs(akr::akr_node(n, k, j) - ref) <= 4e-16);
      }
    }
  }
}

TEST_CASE("akr_node domain errors") {
  CHECK_THROWS_AS((void)akr::akr_node(1, 0, 2), akr::DomainError);
  CHECK_THROWS_AS((void)akr::akr_node(5, 0, 1), akr::DomainError);
  CHECK_THROWS_AS((void)akr::akr_node(5, 6, 2), akr::DomainError);
  CHECK_THROWS_AS((void)akr::akr_node(5, -1, 2), akr::DomainError);
  CHECK_THROWS_AS((void)akr::build_node_table(2, 3), akr::DomainError);
}

TEST_CASE("build_node_table examples") {
  const auto t22 = akr::build_node_table(2, 2).nodes();
  CHECK(std::vector<double>(t22.begin(), t22.end()) == std::vector<double>{0.0, 0.0, 1.0});

  const auto t33 = akr::build_node_table(3, 3).nodes();
  CHECK(std::vector<double>(t33.begin(), t33.end()) == std::vector<double>{0.0, 0.0, 0.0, 1.0});

  const auto table = akr::build_node_table(4, 2);
  CHECK(table[0] == 0.0);
  CHECK(table[1] == 0.0);
  CHECK(std::abs(table[2] - std::sqrt(1.0 / 6.0)) <= 2e-16);
  CHECK(std::abs(table[3] - std::sqrt(0.5)) <= 2e-16);
  CHECK(table[4] == 1.0);
}

TEST_CASE("node table invariants") {
  for (const int j : {2, 3, 5}) {
    for (int n = j; n <= 600; n += (n < 50 ? 1 : 37)) {
      const auto table = akr::build_node_table(n, j);
      CHECK(table.nodes().size() == static_cast<std::size_t>(n) + 1);
      for (int k = 0; k < j; ++k) CHECK(table[k] == 0.0);
      CHECK(table[n] == 1.0);
      for (int k = 1; k <= n; ++k) CHECK(table[k] >= table[k - 1]);
      if (j == 2) {
        for (int k = 0; k <= n; ++k) {
          const double gap = static_cast<double>(k) / n - table[k];
          CHECK(gap >= -1e-15);
          CHECK(gap <= 1.0 / n + 1e-15);
        }
      }
    }
  }
}

TEST_CASE("remainder_R examples") {
  CHECK(akr::remainder_R(4, 0) == -0.125);
  CHECK(akr::remainder_R(2, 2) == 0.0);
  CHECK(akr::remainder_R(4, 1) == doctest::Approx(0.15625).epsilon(1e-15));
  CHECK_THROWS_AS((void)akr::remainder_R(1, 0), akr::DomainError);
  CHECK_THROWS_AS((void)akr::remainder_R(4, 5), akr::DomainError);
}

TEST_CASE("remainder R(n,0), R(n,n) and the sign property up to n = 4096") {
  for (int n = 2; n <= 4096; ++n) {
    const double expected = -1.0 / (2.0 * n);
    CHECK(std::abs(akr::remainder_R(n, 0) - expected) <= ulp(expected));
    CHECK(akr::remainder_R(n, n) == 0.0);
    for (int k = 1; k <= n; ++k) {
      if (akr::remainder_R(n, k) < -1e-15) FAIL("R(" << n << "," << k << ") negative");
    }
  }
}

TEST_CASE("remainder matches the 50-digit oracle") {
  using oracle::Real;
  for (const int n : {2, 3, 10, 101, 2048}) {
    for (int k = 0; k <= n; k += std::max(1, n / 50)) {
      const Real nn(n), kk(k);
      const Real ref = kk / nn - oracle::node(n, k, 2) - 1 / (2 * nn) + kk / (2 * nn * nn);
      CHECK(std::abs(akr::remainder_R(n, k) - oracle::to_double(ref)) <= 1e-16);
    }
  }
}

TEST_CASE("nodes and remainder are linked by their defining identity") {
  double worst = 0.0;
  for (int n = 2; n <= 2048; ++n) {
    const auto table = akr::build_node_table(n, 2);
    const double nn = n;
    for (int k = 0; k <= n; ++k) {
      const double kk = k;
      const double via_r = kk / nn - 1.0 / (2 * nn) + kk / (2 * nn * nn) - akr::remainder_R(n, k);
      worst = std::max(worst, std::abs(table[k] - via_r));
    }
  }
  CHECK(worst <= 1e-14);
}

TEST_CASE("akr_apply examples") {
  const Function1D one{[](double) { return 1.0; }, {}, {}};
  const Function1D e1{[](double t) { return t; }, {}, {}};
  const Function1D e2{[](double t) { return t * t; }, {}, {}};
  CHECK(std::abs(akr::akr_apply(one, 8, 2, 0.3) - 1.0) <= 1e-15);
  CHECK(std::abs(akr::akr_apply(e2, 16, 2, 0.4) - 0.16) <= 1e-12);
  CHECK(akr::akr_apply(e1, 2, 2, 0.5) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK_THROWS_AS((void)akr::akr_apply(e1, 2, 3, 0.5), akr::DomainError);
}

TEST_CASE("akr_apply of e_1 agrees with the 50-digit oracle for n <= 32") {
  const Function1D e1{[](double t) { return t; }, {}, {}};
  const auto identity = [](const oracle::Real& t) { return t; };
  for (int n = 2; n <= 32; ++n) {
    for (int i = 0; i <= 10; ++i) {
      const double x = i / 10.0;
      const double ref = oracle::to_double(oracle::apply(identity, n, 2, x, true));
      CHECK(std::abs(akr::akr_apply(e1, n, 2, x) - ref) <= 1e-13);
    }
  }
}

TEST_CASE("fixed_point_error examples") {
  CHECK(akr::fixed_point_error(2, 2, 11) <= 1e-13);
  CHECK(akr::fixed_point_error(64, 2, 101) <= 1e-12);
  CHECK(akr::fixed_point_error(64, 3, 101) <= 1e-12);
  CHECK(akr::fixed_point_error(500, 5, 51) <= 1e-12);
  CHECK_THROWS_AS((void)akr::fixed_point_error(64, 2, 1), akr::DomainError);
}

#include <cmath>
#include <random>

#include "doctest.h"
#include "hardyz/davenport_heilbronn.hpp"
#include "hardyz/error.hpp"
#include "oracles.hpp"

using namespace hz;

TEST_CASE("mixing constant") {
  const DHConstants& c = dh_constants();
  CHECK(std::abs(std::tan(c.theta_dh) - c.tan_theta) < 1e-14);
  CHECK(c.tan_theta == doctest::Approx(0.28407904384041227).epsilon(1e-15));
}

TEST_CASE("f(2) against the Dirichlet series") {
  CHECK(std::abs(dh_f(2.0) - oracle::kDHf2) < 1e-12);
  // brute-force series with period-5 coefficients and an integral tail bound
  const double t = dh_constants().tan_theta;
  const double a[5] = {0.0, 1.0, t, -t, -1.0};
  double sum = 0.0;
  const long n_max = 1000000;
  for (long n = n_max; n >= 1; --n) sum += a[n % 5] / (static_cast<double>(n) * n);
  CHECK(std::abs(dh_f(2.0).real() - sum) < 1e-9);
}

TEST_CASE("conjugate symmetry") {
  const cdouble s(0.7, 30.0);
  CHECK(std::abs(dh_f(std::conj(s)) - std::conj(dh_f(s))) < 1e-13);
}

TEST_CASE("functional equation residual") {
  CHECK(dh_functional_residual(cdouble(0.3, 20.0)) < 1e-8);
  CHECK(dh_functional_residual(cdouble(0.5, 10.0)) < 1e-8);
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> re(0.01, 0.99), im(-200.0, 200.0);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) worst = std::max(worst, dh_functional_residual(cdouble(re(rng), im(rng))));
  CHECK(worst < 1e-7);
}

TEST_CASE("poles cancel at s = 1") {
  for (int k = 0; k < 10; ++k) {
    const cdouble dir = std::polar(1.0, 2.0 * 3.141592653589793 * k / 10.0);
    const cdouble v1 = dh_f(1.0 + 1e-6 * dir);
    const cdouble v2 = dh_f(1.0 + 1e-3 * dir);
    CHECK(std::isfinite(std::abs(v1)));
    CHECK(std::abs(v1 - v2) < 1e-2);
  }
  CHECK(std::isfinite(std::abs(dh_f(1.0))));
}

TEST_CASE("Z_f is real on the line") {
  CHECK(std::isfinite(dh_z(25.0)));
  CHECK(dh_z(-25.0) == doctest::Approx(dh_z(25.0)).epsilon(1e-12));
}

TEST_CASE("off-line zero near 0.8085 + 85.699i") {
  const DHSearch s = dh_zero_search_detail(0.6, 0.95, 80.0, 90.0);
  CHECK(s.winding == 1);
  REQUIRE(s.zeros.size() == 1);
  const StripZero& z = s.zeros[0];
  CHECK(std::abs(z.position.real() - oracle::kDHSpira_beta) < 1e-10);
  CHECK(std::abs(z.position.imag() - oracle::kDHSpira_gamma) < 1e-10);
  CHECK(z.residual <= 1e-8);
  CHECK_FALSE(z.on_line);
}

TEST_CASE("critical-line zeros agree with the line scan") {
  const DHSearch s = dh_zero_search_detail(0.45, 0.55, 10.0, 30.0);
  const auto line = dh_line_scan(10.0, 30.0);
  CHECK(s.winding == static_cast<int>(s.zeros.size()));
  REQUIRE(s.zeros.size() == line.size());
  REQUIRE(!line.empty());
  for (std::size_t i = 0; i < line.size(); ++i) {
    CHECK(s.zeros[i].on_line);
    CHECK(s.zeros[i].residual <= 1e-8);
    CHECK(std::abs(s.zeros[i].position.imag() - line[i].position.imag()) < 1e-8);
  }
}

TEST_CASE("mirrored rectangles give conjugate zeros") {
  const auto up = dh_zero_search(0.6, 0.95, 80.0, 90.0);
  const auto down = dh_zero_search(0.6, 0.95, -90.0, -80.0);
  REQUIRE(up.size() == down.size());
  for (std::size_t i = 0; i < up.size(); ++i) CHECK(std::abs(up[i].position - std::conj(down[i].position)) < 1e-9);
}

TEST_CASE("line scan on [10, 100]") {
  const auto z = dh_line_scan(10.0, 100.0);
  CHECK(z.size() >= 1);
  for (const auto& r : z) {
    CHECK(r.residual <= 1e-8);
    CHECK(r.on_line);
  }
}

TEST_CASE("search preconditions") {
  CHECK(dh_zero_search(0.6, 0.95, 80.0, 80.0).empty());
  CHECK_THROWS_AS(dh_zero_search(0.0, 0.5, 10.0, 20.0), UsageError);
  CHECK_THROWS_AS(dh_zero_search(0.2, 0.5, 10.0, 600.0), UsageError);
  CHECK_THROWS_AS(dh_line_scan(5.0, 20.0), UsageError);
}

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "hardyz/convolution.hpp"
#include "hardyz/error.hpp"
#include "hardyz/zero_machinery.hpp"
#include "hardyz/zeta_eval.hpp"
#include "oracles.hpp"

using namespace hz;
using std::numbers::pi;

namespace {

// Plain midpoint sum of Z(t + x) f(x / G) on |x| <= R.
double riemann_sum(double t, const ConvolutionKernelSpec& spec, double step) {
  const double R = truncation_radius(spec, t);
  const long n = static_cast<long>(std::ceil(2 * R / step));
  const double h = 2 * R / n;
  double s = 0.0;
  for (long i = 0; i < n; ++i) {
    const double x = -R + (i + 0.5) * h;
    s += z_oracle(t + x).z_value * (*spec.testfn)(x / spec.G);
  }
  return spec.amplitude * s * h;
}

}  // namespace

TEST_CASE("M/G reproduces Z at t = 100") {
  const auto spec = make_kernel_spec(default_test_function(), 1.0, 100.0);
  const ConvValue v = m_conv_detail(100.0, spec);
  CHECK(std::abs(v.value / spec.G - oracle::kZ100) < 1e-6);
  CHECK(v.abs_error < 1e-8);
}

TEST_CASE("M against a brute-force Riemann sum") {
  const auto spec = make_kernel_spec(default_test_function(), 2.0, 500.0);
  const double m = m_conv(500.0, spec);
  CHECK(std::abs(m - riemann_sum(500.0, spec, spec.G / 400.0)) < 1e-7);
}

TEST_CASE("linearity and the zero kernel") {
  const auto base = make_kernel_spec(default_test_function(), 1.0, 100.0);
  const double m = m_conv(100.0, base);
  for (double c : {2.0, -1.0}) {
    const auto scaled = make_kernel_spec(default_test_function(), 1.0, 100.0, c);
    CHECK(std::abs(m_conv(100.0, scaled) - c * m) <= 1e-12 * std::abs(c * m));
  }
  const auto zero = make_kernel_spec(default_test_function(), 1.0, 100.0, 0.0);
  CHECK(m_conv(100.0, zero) == 0.0);
}

TEST_CASE("derivative identity") {
  const auto spec = make_kernel_spec(default_test_function(), 1.0, 100.0);
  CHECK(m_conv_derivative(100.0, spec, 0) == m_conv(100.0, spec));
  const double h = 1e-4;
  const double mp = m_conv(100.0 + h, spec), m0 = m_conv(100.0, spec), mm = m_conv(100.0 - h, spec);
  CHECK(std::abs(m_conv_derivative(100.0, spec, 1) - (mp - mm) / (2 * h)) < 1e-5);
  CHECK(std::abs(m_conv_derivative(100.0, spec, 2) - (mp - 2 * m0 + mm) / (h * h)) < 1e-5 / h);
  CHECK_THROWS_AS(m_conv_derivative(100.0, spec, 7), UsageError);
}

TEST_CASE("lattice profile matches pointwise quadrature") {
  const auto spec = make_kernel_spec(default_test_function(), 1.0, 300.0);
  const LatticeProfile p = convolution_lattice(spec, 299.0, 0.5, 5, 0);
  REQUIRE(p.m.size() == 5);
  for (std::size_t i = 0; i < p.m.size(); ++i) CHECK(std::abs(p.m[i] - m_conv(p.t[i], spec)) < 1e-8);
  CHECK(p.quadrature_err < 1e-8);
}

TEST_CASE("convolution residual at T = 1000") {
  const auto spec = make_kernel_spec(default_test_function(), 1.0, 1000.0);
  const ConvolutionProfile p = theorem1_residual_study(1000.0, 200, spec);
  CHECK(p.grid.size() == 200);
  CHECK(p.within_hypothesis);
  CHECK(p.max_residual_over_g <= 1e-6);
  CHECK(p.window == doctest::Approx(std::pow(1000.0, 0.25) * std::pow(std::log(1000.0), 0.6)));
}

TEST_CASE("hypothesis on delta is enforced") {
  const auto f = default_test_function();
  const double limit = 2 * pi * (f->b_plateau() - f->a_support());
  const auto spec = make_kernel_spec(f, limit + 0.1, 1000.0);
  CHECK_THROWS_AS(theorem1_residual_study(1000.0, 20, spec), UsageError);
}

TEST_CASE("narrow plateau breaks the reproduction") {
  const auto f = std::make_shared<const TestFunction>(make_f_from_plateau(make_plateau(make_bump(1.0), 1.05)));
  const auto spec = make_kernel_spec(f, 8.0, 1000.0);
  Theorem1Options o;
  o.enforce_hypothesis = false;
  const ConvolutionProfile p = theorem1_residual_study(1000.0, 40, spec, o);
  CHECK_FALSE(p.within_hypothesis);
  CHECK(p.max_residual_over_g > 1e-3);
}

TEST_CASE("windowed lower-bound functional") {
  const auto spec = make_kernel_spec(default_test_function(), 1.0, 2000.0);
  const Lemma1Result r = lemma1_lower_bound(2000.0, 20.0, spec);
  CHECK(r.holds);
  CHECK(r.lhs >= 0.9 * r.rhs);
  // the plateau value is 1, so rhs reduces to G V
  CHECK(r.rhs == doctest::Approx(r.G * r.V).epsilon(1e-12));
  CHECK_THROWS_AS(lemma1_lower_bound(2000.0, 1.0, spec), UsageError);
}

TEST_CASE("lower-bound functional at the edge V = L") {
  const auto spec = make_kernel_spec(default_test_function(), 1.0, 1000.0);
  const double L = std::pow(std::log(1000.0), 0.6);
  const Lemma1Result r = lemma1_lower_bound(1000.0, L, spec);
  CHECK(r.v_in_range);
  CHECK(r.lhs > 0.0);
  CHECK(r.rhs > 0.0);
}

TEST_CASE("divided differences") {
  // u^n has top divided difference 1
  for (int n = 1; n <= 5; ++n) {
    std::vector<double> nodes;
    for (int j = 1; j <= n; ++j) nodes.push_back(0.3 * j - 0.7);
    const auto F = [n](double u) { return std::pow(u, n); };
    CHECK(std::abs(divided_difference(F, nodes, 1.9).value - 1.0) < 1e-11);
  }
  const std::vector<double> pm{-1.0, 1.0};
  const DividedDifference d = divided_difference([](double u) { return u * u - 1.0; }, pm, 0.0);
  CHECK(d.zeros_at_nodes);
  CHECK(d.reconstruction == -1.0);
  CHECK(d.f_at_x == -1.0);
  const std::vector<double> dup{0.5, 0.5};
  CHECK_THROWS_AS(divided_difference([](double u) { return u; }, dup, 0.0), UsageError);
}

TEST_CASE("divided differences of random polynomials") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> c(-1.0, 1.0), x(-2.0, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> coeff(6);
    for (auto& v : coeff) v = c(rng);
    auto P = [coeff](double u) {
      double s = 0.0;
      for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) s = s * u + *it;
      return s;
    };
    std::vector<double> nodes(5);
    for (auto& v : nodes) v = x(rng);
    const double px = 2.5;
    const DividedDifference d = divided_difference(P, nodes, px);
    // Newton form: P(x) = sum_k [x_1..x_k] prod_{j<k}(x - x_j) + prod (x - x_j) [x, x_1..x_n]
    const DividedDifferenceTable table(P, nodes);
    double newton = 0.0, prod = 1.0;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      newton += table.entry(0, k) * prod;
      prod *= px - nodes[k];
    }
    newton += prod * d.value;
    CHECK(std::abs(newton - P(px)) < 1e-10 * std::max(1.0, std::abs(P(px))));

    std::vector<double> shuffled = nodes;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(std::abs(divided_difference(P, shuffled, px).value - d.value) < 1e-12 * std::max(1.0, std::abs(d.value)));
  }
}

TEST_CASE("zero-product bound") {
  const std::vector<double> z{0.0, pi};
  const Bound75 b = bound_7_5_check([](double u) { return std::sin(u); }, z, pi / 2, 1.0);
  CHECK(b.lhs == doctest::Approx(1.0));
  CHECK(b.rhs == doctest::Approx(pi * pi / 8));
  CHECK(b.holds);

  const auto zs = scan_zeros(10.0, 25.0);
  REQUIRE(zs.size() == 2);
  const std::vector<double> zz{zs[0].gamma, zs[1].gamma};
  auto Z = [](double t) { return z_oracle(t).z_value; };
  const double sup2 = sampled_sup([](double t) { return z_jet(t).d2; }, zz[0], zz[1], 400);
  for (double t : {15.0, 17.5, 20.0}) CHECK(bound_7_5_check(Z, zz, t, 1.05 * sup2).holds);
  const std::vector<double> not_zeros{1.0, 2.0};
  CHECK_THROWS_AS(bound_7_5_check([](double u) { return std::sin(u); }, not_zeros, 0.5, 1.0), UsageError);
}

TEST_CASE("zero counts of Z and M coincide when delta is small") {
  const auto spec = make_kernel_spec(default_test_function(), 1.0, 1000.0);
  const CountComparison c = compare_counts(1000.0, 20.0, spec);
  CHECK(c.n_z == c.n_m);
  CHECK(c.n_z > 20);
  REQUIRE(c.zeros_z.size() == c.zeros_m.size());
  for (std::size_t i = 0; i < c.zeros_z.size(); ++i) CHECK(std::abs(c.zeros_z[i] - c.zeros_m[i]) < 1e-6);
  const CountComparison e = compare_counts(1000.0, 0.0, spec);
  CHECK(e.n_z == 0);
  CHECK(e.n_m == 0);
}

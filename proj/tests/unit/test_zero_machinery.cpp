#include <algorithm>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "hardyz/error.hpp"
#include "hardyz/zero_machinery.hpp"
#include "hardyz/zeta_eval.hpp"
#include "oracles.hpp"

using namespace hz;

TEST_CASE("first zeros") {
  const auto zs = scan_zeros(10.0, 50.0);
  REQUIRE(zs.size() == 10);
  CHECK(std::abs(zs[0].gamma - oracle::kGamma1) < 1e-9);
  CHECK(std::abs(zs[1].gamma - oracle::kGamma2) < 1e-9);
  CHECK(scan_zeros(30.0, 30.0).empty());
}

TEST_CASE("zeros on [10, 100]") {
  const ZeroScan scan = scan_zeros_detail(10.0, 100.0);
  REQUIRE(scan.zeros.size() == 29);
  CHECK(scan.warnings.empty());
  CHECK(std::abs(scan.zeros.back().gamma - oracle::kGamma29) < 1e-9);
  for (std::size_t i = 0; i < scan.zeros.size(); ++i) {
    const ZeroRecord& z = scan.zeros[i];
    CHECK(z.residual <= 1e-8);
    CHECK(z.bracket_lo < z.gamma);
    CHECK(z.gamma < z.bracket_hi);
    CHECK(z.bracket_hi - z.bracket_lo <= 1e-9);
    if (z.method == ZeroMethod::sign_change)
      CHECK(z_oracle(z.bracket_lo).z_value * z_oracle(z.bracket_hi).z_value <= 0.0);
    if (i > 0) CHECK(scan.zeros[i - 1].gamma < z.gamma);
  }
  // constant sign strictly between consecutive zeros
  for (std::size_t i = 0; i + 1 < scan.zeros.size(); ++i) {
    const double a = scan.zeros[i].gamma, b = scan.zeros[i + 1].gamma;
    const double s0 = z_oracle(a + (b - a) / 6).z_value;
    for (int j = 2; j <= 5; ++j) CHECK(s0 * z_oracle(a + j * (b - a) / 6).z_value > 0.0);
  }
}

TEST_CASE("fine fixed-step scan agrees with the adaptive scan") {
  ScanOptions o;
  o.fixed_step = 0.05;
  const auto fine = scan_zeros(10.0, 100.0, o);
  const auto adaptive = scan_zeros(10.0, 100.0);
  REQUIRE(fine.size() == adaptive.size());
  for (std::size_t i = 0; i < fine.size(); ++i) CHECK(std::abs(fine[i].gamma - adaptive[i].gamma) < 1e-9);
}

TEST_CASE("coarse step is reported") {
  ScanOptions o;
  o.fixed_step = 3.0;
  const ZeroScan scan = scan_zeros_detail(100.0, 200.0, o);
  CHECK_FALSE(scan.warnings.empty());
}

TEST_CASE("scan preconditions") {
  CHECK_THROWS_AS(scan_zeros(5.0, 20.0), UsageError);
  CHECK_THROWS_AS(scan_zeros(30.0, 20.0), UsageError);
}

TEST_CASE("Riemann-von Mangoldt counts") {
  const CountSummary c100 = count_and_s(100.0);
  CHECK(c100.n_found == 29);
  CHECK(std::abs(c100.s_estimate) < 1.0);
  CHECK(c100.s_estimate == doctest::Approx(c100.n_found - c100.main_term));
  const CountSummary c50 = count_and_s(50.0);
  CHECK(c50.n_found == 10);
  CHECK(c50.main_term == doctest::Approx(9.4228).epsilon(1e-4));
  const double T = 2.0 * std::numbers::pi * std::exp(1.0);
  CHECK(riemann_von_mangoldt_main(T) == doctest::Approx(0.875).epsilon(1e-14));
  CHECK_THROWS_AS(count_and_s(oracle::kGamma1), UsageError);
}

TEST_CASE("count consistency up to 500") {
  for (double T : {200.0, 300.0, 500.0}) {
    const CountSummary c = count_and_s(T);
    CHECK(std::abs(c.s_estimate) < 3.0);
  }
}

TEST_CASE("Lehmer scan below 10 finds the negative local maximum") {
  const LehmerScan s = lehmer_scan_detail(2.0, 10.0);
  REQUIRE(s.events.size() == 1);
  CHECK(s.events[0].kind == LehmerKind::neg_local_max);
  CHECK(std::abs(s.events[0].z_ext + 0.52625) < 1e-4);
  CHECK(std::abs(s.events[0].t_ext - 2.47575) < 1e-4);
  CHECK(lehmer_scan(20.0, 20.0).empty());
}

TEST_CASE("no sign-preserving extrema on [10, 500]") {
  const LehmerScan s = lehmer_scan_detail(10.0, 500.0);
  for (const auto& e : s.events) CHECK(e.kind == LehmerKind::close_pair);
  CHECK(s.extrema_examined > 250);
}

TEST_CASE("raising the Lehmer threshold never removes events") {
  const auto lo = lehmer_scan(10.0, 300.0, 0.0005);
  const auto hi = lehmer_scan(10.0, 300.0, 0.05);
  CHECK(hi.size() >= lo.size());
  for (const auto& e : lo) {
    const bool found = std::any_of(hi.begin(), hi.end(), [&](const LehmerEvent& f) {
      return std::abs(f.t_ext - e.t_ext) < 1e-9 && f.kind == e.kind;
    });
    CHECK(found);
  }
  for (const auto& e : hi)
    if (e.kind == LehmerKind::close_pair) {
      REQUIRE(e.gap_pair.has_value());
      CHECK(e.closeness < 0.05);
    }
}

TEST_CASE("Z'/Z is decreasing between zeros") {
  const Prop1Report r = prop1_check(15.0, 100.0);
  CHECK(r.violations.empty());
  CHECK(r.max_value < 0.0);
  const Prop1Report r2 = prop1_check(14.2, 20.9);
  CHECK(r2.violations.empty());
  CHECK(r2.zeros.empty());
}

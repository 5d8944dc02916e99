// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fail.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "hardyz/hardyz.hpp"

using namespace hz;
using std::numbers::pi;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

int failures = 0;

void criterion(int id, const char* name, double time_limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = dt <= time_limit_s;
  const bool pass = o.pass && in_time;
  if (!pass) ++failures;
  std::printf("AC%02d %s  %s: %s; %.2f s (limit %.0f s)%s\n", id, pass ? "PASS" : "FAIL", name, o.detail.c_str(), dt,
              time_limit_s, in_time ? "" : " OVER TIME");
  std::fflush(stdout);
}

}  // namespace

int main() {
  criterion(1, "first zero", 1.0, [] {
    const auto zs = scan_zeros(10.0, 20.0);
    if (zs.size() != 1) return Outcome{false, fmt("%zu zeros in [10, 20]", zs.size())};
    const double err = std::abs(zs[0].gamma - 14.134725);
    return Outcome{err <= 1e-5 && zs[0].residual <= 1e-8,
                   fmt("gamma %.10f |diff| %.1e <= 1e-5, residual %.1e <= 1e-8", zs[0].gamma, err, zs[0].residual)};
  });

  criterion(2, "Lehmer landmark", 120.0, [] {
    const double z = z_oracle(2.47575).z_value;
    const LehmerScan s = lehmer_scan_detail(2.0, 1000.0, LehmerOptions{0.0005, 0.005});
    int neg = 0, pos = 0;
    double t_neg = 0.0;
    for (const auto& e : s.events) {
      if (e.kind == LehmerKind::neg_local_max) {
        ++neg;
        t_neg = e.t_ext;
      }
      if (e.kind == LehmerKind::pos_local_min) ++pos;
    }
    const bool ok = std::abs(z + 0.52625) <= 1e-4 && neg == 1 && pos == 0 && std::abs(t_neg - 2.47575) < 1e-3;
    return Outcome{ok, fmt("Z(2.47575) = %.8f, negative maxima %d at t = %.6f, positive minima %d, %zu zeros", z, neg,
                           t_neg, pos, s.zeros.size())};
  });

  criterion(3, "off-line Davenport-Heilbronn zero", 60.0, [] {
    const auto zs = dh_zero_search(0.6, 0.95, 80.0, 90.0);
    if (zs.size() != 1) return Outcome{false, fmt("%zu zeros found", zs.size())};
    const StripZero& z = zs[0];
    const double db = std::abs(z.position.real() - 0.808517);
    const double dg = std::abs(z.position.imag() - 85.699348);
    const bool ok = db <= 1e-4 && dg <= 1e-4 && z.residual <= 1e-8 && !z.on_line;
    return Outcome{ok, fmt("%.9f + %.9fi, |dbeta| %.1e |dgamma| %.1e <= 1e-4, |f| %.1e <= 1e-8, on_line %s",
                           z.position.real(), z.position.imag(), db, dg, z.residual, z.on_line ? "true" : "false")};
  });

  criterion(4, "functional equations", 30.0, [] {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> re(0.01, 0.99), im(-200.0, 200.0);
    double zeta_worst = 0.0, dh_worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const cdouble s(re(rng), im(rng));
      const cdouble lhs = zeta_em(s);
      const cdouble rhs = chi(s) * zeta_em(1.0 - s);
      zeta_worst = std::max(zeta_worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
    }
    for (int i = 0; i < 100; ++i) dh_worst = std::max(dh_worst, dh_functional_residual(cdouble(re(rng), im(rng))));
    return Outcome{zeta_worst <= 1e-10 && dh_worst <= 1e-7,
                   fmt("zeta residual %.1e <= 1e-10, Davenport-Heilbronn residual %.1e <= 1e-7", zeta_worst, dh_worst)};
  });

  criterion(5, "Riemann-von Mangoldt consistency", 120.0, [] {
    bool ok = true;
    std::string d;
    for (double T : {100.0, 500.0, 1000.0}) {
      const CountSummary c = count_and_s(T);
      ok = ok && std::abs(c.s_estimate) < 3.0;
      d += fmt("N(%g) = %ld vs %.3f; ", T, c.n_found, c.main_term);
    }
    d += "|diff| < 3";
    return Outcome{ok, d};
  });

  criterion(6, "Riemann-Siegel vs oracle", 60.0, [] {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> u(50.0, 2000.0);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      const double t = u(rng);
      worst = std::max(worst, std::abs(z_rs(t).z_value - z_oracle(t).z_value) * std::pow(t, 0.75));
    }
    return Outcome{worst <= 10.0, fmt("max |z_rs - z_oracle| t^(3/4) = %.3f <= 10", worst)};
  });

  criterion(7, "convolution reproduces Z at T = 1000", 300.0, [] {
    const auto spec = make_kernel_spec(default_test_function(), 1.0, 1000.0);
    const ConvolutionProfile p = theorem1_residual_study(1000.0, 200, spec);
    return Outcome{p.grid.size() == 200 && p.max_residual_over_g <= 1e-6,
                   fmt("max |M/G - Z| = %.2e <= 1e-6 over %zu points (quadrature budget %.1e)", p.max_residual_over_g,
                       p.grid.size(), p.quadrature_err)};
  });

  criterion(8, "windowed lower-bound functional", 300.0, [] {
    const auto spec = make_kernel_spec(default_test_function(), 1.0, 2000.0);
    const Lemma1Result r = lemma1_lower_bound(2000.0, 20.0, spec);
    const double plateau = spec.testfn->fourier(spec.G / (2 * pi) * std::log(std::sqrt(2000.0 / (2 * pi))));
    const double target = 0.9 * spec.G * 20.0 * plateau;
    return Outcome{r.lhs >= target, fmt("lhs %.4f >= 0.9 G V f-hat = %.4f (error terms %.3f)", r.lhs, target,
                                        r.error_terms)};
  });

  criterion(9, "divided differences", 5.0, [] {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::uniform_int_distribution<int> deg(1, 6);
    double worst = 0.0, table_worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      // F = c prod (u - r_j) q(u), total degree <= 6, zeros r_j as nodes
      const int d = deg(rng);
      std::uniform_int_distribution<int> nz(1, d);
      const int n = nz(rng);
      std::vector<double> roots(n), q(d - n + 1);
      for (auto& r : roots) r = u(rng);
      for (auto& c : q) c = u(rng);
      auto F = [roots, q](double x) {
        double p = 1.0;
        for (double r : roots) p *= x - r;
        double s = 0.0;
        for (auto it = q.rbegin(); it != q.rend(); ++it) s = s * x + *it;
        return p * s;
      };
      const double x = u(rng) + 3.0;
      const DividedDifference dd = divided_difference(F, roots, x);
      worst = std::max(worst, std::abs(dd.reconstruction - F(x)) / std::max(1.0, std::abs(F(x))));
      // same quantity from the Newton recursion on {x, r_1, ..., r_n}
      std::vector<double> nodes{x};
      nodes.insert(nodes.end(), roots.begin(), roots.end());
      const double top = DividedDifferenceTable(F, nodes).top();
      table_worst = std::max(table_worst, std::abs(top - dd.value) / std::max(1.0, std::abs(top)));
    }
    // sin with consecutive zeros; every derivative of sin is bounded by 1
    bool bound = true;
    const std::vector<double> z2{0.0, pi}, z3{0.0, pi, 2 * pi};
    for (double x : {0.3, pi / 2, 2.9}) bound = bound && bound_7_5_check([](double t) { return std::sin(t); }, z2, x, 1.0).holds;
    for (double x : {0.7, 4.0, 5.5}) bound = bound && bound_7_5_check([](double t) { return std::sin(t); }, z3, x, 1.0).holds;
    return Outcome{worst <= 1e-10 && table_worst <= 1e-10 && bound,
                   fmt("max reconstruction error %.1e <= 1e-10, vs Newton table %.1e <= 1e-10, sin bound %s", worst,
                       table_worst, bound ? "holds" : "fails")};
  });

  criterion(10, "plateau and Fourier properties", 30.0, [] {
    const auto f = default_test_function();
    const double a = f->a_support(), b = f->b_plateau();
    double plateau_err = 0.0, tail = 0.0, moment = 0.0;
    for (int i = 0; i <= 300; ++i) {
      const double x = (b - a) * i / 300.0;
      plateau_err = std::max({plateau_err, std::abs(f->fourier(x) - 1.0), std::abs(f->fourier_numeric(x) - 1.0)});
    }
    for (int i = 0; i <= 300; ++i) {
      const double x = (b + a) * (1.0 + i / 300.0);
      tail = std::max({tail, std::abs(f->fourier(x)), std::abs(f->fourier_numeric(x))});
    }
    for (int n = 1; n <= 2; ++n)
      for (int i = 0; i < 30; ++i) moment = std::max(moment, std::abs(f->moment_transform(n, (b - a) * i / 30.0)));
    return Outcome{plateau_err <= 1e-9 && tail <= 1e-12 && moment <= 1e-8,
                   fmt("plateau |f-hat - 1| %.1e <= 1e-9, tail |f-hat| %.1e <= 1e-12, moments %.1e <= 1e-8",
                       plateau_err, tail, moment)};
  });

  criterion(11, "second moment error term", 600.0, [] {
    const auto recs = second_moments({100.0, 500.0, 1000.0, 2000.0});
    bool ok = true;
    std::string d;
    for (const auto& r : recs) {
      const double bound = 10.0 * std::cbrt(r.T);
      ok = ok && std::abs(r.e_term) <= bound;
      d += fmt("E1(%g) = %.3f (bound %.1f); ", r.T, r.e_term, bound);
    }
    d += fmt("quadrature error %.1e", recs.back().abs_error);
    return Outcome{ok, d};
  });

  criterion(12, "mu curves", 1.0, [] {
    const ConvexityReport rep = convexity_report();
    std::string d;
    for (const auto& c : rep.curves)
      d += fmt("%s: 1/8 %d convex %d monotone %d relation %d; ", to_string(c.variant), c.half_is_one_eighth, c.convex,
               c.nonincreasing, c.functional_relation);
    d += fmt("grid %d points", rep.grid_points);
    return Outcome{rep.all_pass() && rep.grid_points == 1001, d};
  });

  criterion(13, "arithmetic equivalents", 30.0, [] {
    const MertensTable t = mobius_sieve(1000000);
    const std::int64_t viol = divisor_sum_violation(t, 100000);
    long growth_fail = 0;
    for (std::int64_t N = 1; N <= 1000000; ++N)
      for (int k = 1; k <= 3; ++k) growth_fail += !check_1_7(t, N, k);
    const std::int64_t p = pi_count(1000000);
    const double li2 = li(2.0);
    const double li_err = std::abs(li2 - 1.045163780117492784844588889);
    const bool ok = viol == 0 && growth_fail == 0 && p == 78498 && li_err <= 1e-7;
    return Outcome{ok, fmt("divisor-sum violations %lld, growth failures %ld (N <= 1e6, k <= 3), pi(1e6) = %lld, "
                           "li(2) = %.12f |diff| %.1e <= 1e-7",
                           static_cast<long long>(viol), growth_fail, static_cast<long long>(p), li2, li_err)};
  });

  std::printf("%d of 13 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}

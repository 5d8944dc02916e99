#include "hardyz/moments.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <numbers>

#include "hardyz/error.hpp"
#include "hardyz/parallel.hpp"
#include "hardyz/quadrature.hpp"
#include "hardyz/zero_machinery.hpp"
#include "hardyz/zeta_eval.hpp"

namespace hz {

double p1(double y) { return y + 2.0 * kEulerGamma - 1.0 - std::log(2.0 * std::numbers::pi); }

std::vector<MomentRecord> second_moments(std::vector<double> Ts, const MomentOptions& opts) {
  if (Ts.empty()) return {};
  for (double T : Ts)
    if (!(T >= 10.0 && T <= 3000.0)) throw UsageError("second_moment: requires 10 <= T <= 3000");
  if (!(opts.panel_fraction > 0.0 && opts.panel_fraction <= 1.0))
    throw UsageError("second_moment: panel_fraction must be in (0, 1]");
  std::vector<double> sorted = Ts;
  std::sort(sorted.begin(), sorted.end());

  // Breakpoints: panels of panel_fraction * local gap, plus every checkpoint.
  std::vector<double> breaks{0.0};
  std::size_t next = 0;
  while (next < sorted.size()) {
    const double t = breaks.back();
    const double step = opts.panel_fraction * mean_zero_gap(t);
    if (t + step >= sorted[next]) {
      if (sorted[next] > t) breaks.push_back(sorted[next]);
      ++next;
    } else {
      breaks.push_back(t + step);
    }
  }

  auto z2 = [](double t) {
    const double z = z_oracle(t).z_value;
    return z * z;
  };
  QuadOptions o;
  o.abs_tol = 1e-12;
  o.rel_tol = 1e-13;

  const std::size_t npanels = breaks.size() - 1;
  std::vector<QuadResult> panels(npanels);
  parallel_for(npanels, [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) panels[i] = integrate(z2, breaks[i], breaks[i + 1], o);
  });

  std::vector<MomentRecord> recs;
  double acc = 0.0;
  double err = 0.0;
  std::size_t idx = 0;
  for (std::size_t i = 0; i < npanels; ++i) {
    if (!panels[i].converged) throw NumericError("second_moment: panel quadrature did not converge");
    acc += panels[i].value;
    err += panels[i].abs_error;
    while (idx < sorted.size() && sorted[idx] == breaks[i + 1]) {
      MomentRecord m;
      m.T = sorted[idx];
      m.integral = acc;
      m.main_term = m.T * p1(std::log(m.T));
      m.e_term = m.integral - m.main_term;
      m.abs_error = err;
      recs.push_back(m);
      ++idx;
    }
  }
  // Restore the caller's order.
  std::vector<MomentRecord> out;
  for (double T : Ts)
    out.push_back(*std::find_if(recs.begin(), recs.end(), [T](const MomentRecord& m) { return m.T == T; }));
  return out;
}

MomentRecord second_moment(double T, const MomentOptions& opts) {
  return second_moments({T}, opts).front();
}

// ---------------------------------------------------------------------------

const char* to_string(MuVariant v) {
  switch (v) {
    case MuVariant::curve_4_24: return "curve_4_24";
    case MuVariant::curve_4_25: return "curve_4_25";
    case MuVariant::curve_4_26: return "curve_4_26";
  }
  return "?";
}

double mu_curve(MuVariant v, double s) {
  switch (v) {
    case MuVariant::curve_4_24:
      if (s <= 0.25) return 0.5 - s;
      if (s < 0.75) return 0.375 - s / 2.0;
      return 0.0;
    case MuVariant::curve_4_25:
      if (s <= 0.0) return 0.5 - s;
      if (s < 0.5) return (2.0 - 3.0 * s) / 4.0;
      if (s <= 1.0) return (1.0 - s) / 4.0;
      return 0.0;
    case MuVariant::curve_4_26:
      if (s <= 0.0) return 0.5 - s;
      if (s < 1.0) return 0.5 * (1.0 - s) * (1.0 - s);
      return 0.0;
  }
  return 0.0;
}

namespace {

Rational norm(std::int64_t n, std::int64_t d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const std::int64_t g = std::gcd(n, d);
  return g == 0 ? Rational{0, 1} : Rational{n / g, d / g};
}
Rational add(Rational a, Rational b) { return norm(a.num * b.den + b.num * a.den, a.den * b.den); }
Rational sub(Rational a, Rational b) { return add(a, Rational{-b.num, b.den}); }
Rational mul(Rational a, Rational b) { return norm(a.num * b.num, a.den * b.den); }
int cmp(Rational a, Rational b) {
  const std::int64_t l = a.num * b.den;
  const std::int64_t r = b.num * a.den;
  return (l > r) - (l < r);
}
Rational q(std::int64_t n, std::int64_t d = 1) { return norm(n, d); }

}  // namespace

Rational mu_curve_exact(MuVariant v, Rational s) {
  if (s.den <= 0) throw UsageError("mu_curve_exact: denominator must be positive");
  s = norm(s.num, s.den);
  const Rational half = q(1, 2);
  switch (v) {
    case MuVariant::curve_4_24:
      if (cmp(s, q(1, 4)) <= 0) return sub(half, s);
      if (cmp(s, q(3, 4)) < 0) return sub(q(3, 8), mul(s, half));
      return q(0);
    case MuVariant::curve_4_25:
      if (cmp(s, q(0)) <= 0) return sub(half, s);
      if (cmp(s, half) < 0) return mul(sub(q(2), mul(q(3), s)), q(1, 4));
      if (cmp(s, q(1)) <= 0) return mul(sub(q(1), s), q(1, 4));
      return q(0);
    case MuVariant::curve_4_26:
      if (cmp(s, q(0)) <= 0) return sub(half, s);
      if (cmp(s, q(1)) < 0) {
        const Rational d = sub(q(1), s);
        return mul(half, mul(d, d));
      }
      return q(0);
  }
  return q(0);
}

bool ConvexityReport::all_pass() const {
  if (!sharpening) return false;
  for (const auto& c : curves)
    if (!(c.half_is_one_eighth && c.convex && c.nonincreasing && c.functional_relation &&
          c.max_breakpoint_jump <= 1e-15))
      return false;
  return true;
}

ConvexityReport convexity_report() {
  ConvexityReport rep;
  const int n = rep.grid_points;
  const std::int64_t steps = n - 1;  // 1000
  for (MuVariant v : {MuVariant::curve_4_24, MuVariant::curve_4_25, MuVariant::curve_4_26}) {
    MuCurveCheck c;
    c.variant = v;
    c.half_is_one_eighth = cmp(mu_curve_exact(v, q(1, 2)), q(1, 8)) == 0;

    // Shape grid sigma_i = -1/2 + 2 i / 1000.
    std::vector<Rational> mu(n);
    for (std::int64_t i = 0; i < n; ++i) mu[i] = mu_curve_exact(v, q(-steps / 2 + 2 * i, steps));
    c.convex = true;
    c.nonincreasing = true;
    for (int i = 0; i + 1 < n; ++i)
      if (cmp(mu[i + 1], mu[i]) > 0) c.nonincreasing = false;
    for (int i = 1; i + 1 < n; ++i) {
      const Rational d2 = add(sub(mu[i + 1], mul(q(2), mu[i])), mu[i - 1]);
      if (cmp(d2, q(0)) < 0) c.convex = false;
    }

    // Functional relation on sigma_i = i / 1000.
    c.functional_relation = true;
    for (std::int64_t i = 0; i < n; ++i) {
      const Rational s = q(i, steps);
      const Rational lhs = sub(mu_curve_exact(v, s), mu_curve_exact(v, sub(q(1), s)));
      if (cmp(lhs, sub(q(1, 2), s)) != 0) c.functional_relation = false;
    }

    // Continuity of the double-precision form at each breakpoint.
    for (double bp : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      const double l = mu_curve(v, std::nextafter(bp, -1.0));
      const double r = mu_curve(v, std::nextafter(bp, 2.0));
      const double m = mu_curve(v, bp);
      c.max_breakpoint_jump =
          std::max({c.max_breakpoint_jump, std::abs(l - m) - 2e-16, std::abs(r - m) - 2e-16, 0.0});
    }
    rep.curves.push_back(c);
  }
  rep.sharpening = true;
  for (std::int64_t i = 1; i < steps; ++i) {
    if (2 * i == steps) continue;
    const Rational s = q(i, steps);
    if (cmp(mu_curve_exact(MuVariant::curve_4_26, s), mu_curve_exact(MuVariant::curve_4_25, s)) >= 0)
      rep.sharpening = false;
  }
  return rep;
}

}  // namespace hz

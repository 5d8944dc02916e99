#include "hardyz/zeta_eval.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "euler_maclaurin.hpp"
#include "hardyz/compensated_sum.hpp"
#include "hardyz/error.hpp"

namespace hz {
namespace {

constexpr double kPi = std::numbers::pi;

// Stieltjes constants gamma_1, gamma_2.
constexpr double kGamma0 = 0.57721566490153286061;
constexpr double kGamma1 = -0.0728158454836767249;
constexpr double kGamma2 = -0.0096903631928723185;

using J3 = Jet<cdouble, 3>;

void check_hurwitz(const HurwitzParams& p) {
  if (!(p.a > 0.0 && p.a <= 1.0)) throw UsageError("hurwitz_em: a must lie in (0, 1]");
  if (p.s == cdouble(1.0, 0.0)) throw DomainError("hurwitz_em: pole at s = 1");
}

double c0_raw(double p) {
  return std::cos(2.0 * kPi * (p * p - p - 1.0 / 16.0)) / std::cos(2.0 * kPi * p);
}

// C0(p) = cos(2pi(p^2 - p - 1/16)) / cos(2pi p). The singularity at
// p = 1/4, 3/4 is removable; near it use a Richardson-combined symmetric mean.
double c0(double p) {
  if (std::abs(std::cos(2.0 * kPi * p)) > 1e-3) return c0_raw(p);
  const double h = 2e-3;
  const double m1 = 0.5 * (c0_raw(p + h) + c0_raw(p - h));
  const double m2 = 0.5 * (c0_raw(p + 2 * h) + c0_raw(p - 2 * h));
  return (4.0 * m1 - m2) / 3.0;
}

double lavrik_sum(double t, int k) {
  const double a = std::sqrt(t / (2.0 * kPi));
  const auto n_max = static_cast<long>(std::floor(a));
  const double shift = -t / 2.0 - kPi / 8.0 + kPi * k / 2.0;
  CompensatedSum acc;
  for (long n = 1; n <= n_max; ++n) {
    const double l = std::log(a / static_cast<double>(n));
    double term = std::cos(t * l + shift) / std::sqrt(static_cast<double>(n));
    for (int i = 0; i < k; ++i) term *= l;
    acc.add(term);
  }
  return 2.0 * acc.value();
}

}  // namespace

const char* to_string(ZMethod m) {
  return m == ZMethod::riemann_siegel ? "riemann_siegel" : "euler_maclaurin_via_chi";
}

cdouble zeta_em(cdouble s) {
  const cdouble e = s - 1.0;
  if (e == cdouble(0.0, 0.0)) throw DomainError("zeta_em: pole at s = 1");
  if (std::abs(e) < 1e-4) return 1.0 / e + kGamma0 - kGamma1 * e + kGamma2 / 2.0 * e * e;
  return detail::hurwitz<cdouble>(s, 1.0);
}

ComplexDerivs zeta_em_derivs(cdouble s) {
  if (s == cdouble(1.0, 0.0)) throw DomainError("zeta_em: pole at s = 1");
  const J3 r = detail::hurwitz<J3>(J3::variable(s), 1.0);
  return {r.c[0], r.c[1], 2.0 * r.c[2]};
}

cdouble hurwitz_em(const HurwitzParams& p) {
  check_hurwitz(p);
  if (p.a == 1.0) return zeta_em(p.s);
  return detail::hurwitz<cdouble>(p.s, p.a);
}

namespace {
void check_combination(std::span<const double> coeffs, std::span<const double> a) {
  if (coeffs.size() != a.size() || coeffs.empty())
    throw UsageError("hurwitz_combination: coefficient and shift lists must match");
  double total = 0.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i] > 0.0 && a[i] <= 1.0)) throw UsageError("hurwitz_combination: a must lie in (0, 1]");
    total += coeffs[i];
    scale += std::abs(coeffs[i]);
  }
  if (std::abs(total) > 1e-12 * std::max(scale, 1.0))
    throw UsageError("hurwitz_combination: coefficients must sum to zero");
}
}  // namespace

cdouble hurwitz_combination(cdouble s, std::span<const double> coeffs, std::span<const double> a) {
  check_combination(coeffs, a);
  return detail::hurwitz_combination<cdouble>(s, coeffs, a);
}

ComplexDerivs hurwitz_combination_derivs(cdouble s, std::span<const double> coeffs,
                                         std::span<const double> a) {
  check_combination(coeffs, a);
  const J3 r = detail::hurwitz_combination<J3>(J3::variable(s), coeffs, a);
  return {r.c[0], r.c[1], 2.0 * r.c[2]};
}

double rs_main_sum(double t) { return lavrik_sum(t, 0); }

CriticalLineSample z_rs(double t) {
  if (!(t >= 10.0)) throw UsageError("z_rs: requires t >= 10 (use z_oracle below)");
  const double tau = t / (2.0 * kPi);
  const double a = std::sqrt(tau);
  const double nf = std::floor(a);
  const double p = a - nf;
  const double sign = (static_cast<long>(nf) % 2 == 1) ? 1.0 : -1.0;  // (-1)^{N-1}
  CriticalLineSample out;
  out.t = t;
  out.z_value = rs_main_sum(t) + sign * std::pow(tau, -0.25) * c0(p);
  out.method = ZMethod::riemann_siegel;
  out.err_bound = kRiemannSiegelErrorConstant * std::pow(t, -0.75);
  return out;
}

CriticalLineSample z_oracle(double t) {
  const double at = std::abs(t);
  if (at == 0.0) throw UsageError("z_oracle: requires t != 0");
  const cdouble zeta = zeta_em(cdouble(0.5, at));
  const double th = theta_exact(at);
  const cdouble z = cdouble(std::cos(th), std::sin(th)) * zeta;
  const double tol = 1e-9 * std::max(1.0, std::abs(zeta));
  if (std::abs(z.imag()) > tol)
    throw NumericError("z_oracle: rotated zeta not real (|Im| = " + std::to_string(z.imag()) + ")");
  CriticalLineSample out;
  out.t = t;
  out.z_value = z.real();
  out.method = ZMethod::euler_maclaurin_via_chi;
  out.err_bound = 1e-10 * std::max(1.0, std::abs(zeta));
  return out;
}

ZJet z_jet(double t) {
  const double at = std::abs(t);
  if (at == 0.0) throw UsageError("z_jet: requires t != 0");
  const ComplexDerivs zd = zeta_em_derivs(cdouble(0.5, at));
  const ThetaJet th = theta_jet(at);
  const cdouble rot(std::cos(th.theta), std::sin(th.theta));
  const cdouble i(0.0, 1.0);
  // d/dt = i d/ds on the critical line.
  const cdouble z0 = rot * zd.value;
  const cdouble z1 = rot * (i * th.d1 * zd.value + i * zd.d1);
  const cdouble z2 = rot * (-th.d1 * th.d1 * zd.value + i * th.d2 * zd.value -
                            2.0 * th.d1 * zd.d1 - zd.d2);
  // Z is even: odd derivatives flip sign for negative t.
  const double sgn = t < 0.0 ? -1.0 : 1.0;
  return {z0.real(), sgn * z1.real(), z2.real()};
}

LavrikValue z_derivative_lavrik_detail(double t, int k) {
  if (!(t >= 50.0)) throw UsageError("z_derivative_lavrik: requires t >= 50");
  if (k < 0 || k > 0.5 * std::log(t))
    throw UsageError("z_derivative_lavrik: k must satisfy 0 <= k <= log(t)/2");
  LavrikValue v;
  v.value = lavrik_sum(t, k);
  v.envelope = std::pow(t, -0.25) * std::pow(1.5 * std::log(t), k + 1);
  return v;
}

double z_derivative_lavrik(double t, int k) { return z_derivative_lavrik_detail(t, k).value; }

}  // namespace hz

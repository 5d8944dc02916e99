#pragma once

#include <span>

#include "hardyz/special_fns.hpp"

namespace hz {

enum class ZMethod { riemann_siegel, euler_maclaurin_via_chi };

const char* to_string(ZMethod m);

struct CriticalLineSample {
  double t = 0.0;
  double z_value = 0.0;
  ZMethod method = ZMethod::euler_maclaurin_via_chi;
  double err_bound = 0.0;
};

struct HurwitzParams {
  cdouble s;
  double a = 1.0;  // in (0, 1]
};

/// Riemann zeta by Euler-Maclaurin summation. Laurent expansion for |s-1| < 1e-4.
/// Throws DomainError at s = 1.
cdouble zeta_em(cdouble s);

/// Hurwitz zeta(s, a) = sum_{n>=0} (n+a)^{-s}, Euler-Maclaurin.
cdouble hurwitz_em(const HurwitzParams& p);
inline cdouble hurwitz_em(cdouble s, double a) { return hurwitz_em(HurwitzParams{s, a}); }

/// sum_i c_i zeta(s, a_i) for coefficients with sum_i c_i = 0. The poles at
/// s = 1 cancel inside the formula, so this is finite and accurate at and
/// near s = 1.
cdouble hurwitz_combination(cdouble s, std::span<const double> coeffs, std::span<const double> a);

/// Same combination with its first two s-derivatives: {value, d/ds, d2/ds2}.
struct ComplexDerivs {
  cdouble value;
  cdouble d1;
  cdouble d2;
};
ComplexDerivs hurwitz_combination_derivs(cdouble s, std::span<const double> coeffs,
                                         std::span<const double> a);

/// zeta and its first two derivatives.
ComplexDerivs zeta_em_derivs(cdouble s);

/// Constant c in the recorded Riemann-Siegel bound |error| <= c t^{-3/4}.
/// The largest observed |z_rs - z_oracle| t^{3/4} on [10, 2000] is about 0.12.
inline constexpr double kRiemannSiegelErrorConstant = 0.5;

/// 2 sum_{n <= sqrt(t/2pi)} n^{-1/2} cos(t log(sqrt(t/2pi)/n) - t/2 - pi/8).
double rs_main_sum(double t);

/// Main sum plus the first Riemann-Siegel correction term. Requires t >= 10.
CriticalLineSample z_rs(double t);

/// Z(t) = e^{i theta(t)} zeta(1/2 + it) with zeta from zeta_em. Even in t.
/// Throws NumericError if the rotated value is not real to 1e-9.
CriticalLineSample z_oracle(double t);

/// Z, Z', Z'' at t from the oracle route.
struct ZJet {
  double z;
  double d1;
  double d2;
};
ZJet z_jet(double t);

struct LavrikValue {
  double value = 0.0;
  double envelope = 0.0;  // t^{-1/4} ((3/2) log t)^{k+1}
};

/// Z^{(k)}(t) from the differentiated main sum
///   2 sum n^{-1/2} log(sqrt(t/2pi)/n)^k cos(t log(sqrt(t/2pi)/n) - t/2 - pi/8 + pi k/2).
/// Requires t >= 50 and 0 <= k <= (1/2) log t. For k = 0 the value is
/// bit-identical to rs_main_sum (same code path).
LavrikValue z_derivative_lavrik_detail(double t, int k);
double z_derivative_lavrik(double t, int k);

}  // namespace hz

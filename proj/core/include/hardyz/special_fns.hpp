#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace hz {

using cdouble = std::complex<double>;

// ---------------------------------------------------------------------------
// Bernoulli numbers

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// Exact B_n for 0 <= n <= 30 (B_1 = -1/2). Throws UsageError outside.
Rational bernoulli(int n);
double bernoulli_value(int n);

// ---------------------------------------------------------------------------
// Gamma family

/// Principal-branch log Gamma(z): analytic on C minus (-inf, 0], real on the
/// positive axis. Throws DomainError at z = 0, -1, -2, ...
cdouble log_gamma(cdouble z);
cdouble digamma(cdouble z);
cdouble trigamma(cdouble z);

/// A logarithm of sin(w) (resp. cos(w)) that stays finite for large |Im w|.
/// The branch is continuous in w on each of Im w > 2 and Im w < -2.
cdouble log_sin(cdouble w);
cdouble log_cos(cdouble w);

// ---------------------------------------------------------------------------
// chi(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s), so that zeta(s) = chi(s) zeta(1-s).

struct ChiFactor {
  cdouble s;
  cdouble value;
};

/// Throws DomainError at the poles s = 1, 3, 5, ...
cdouble chi(cdouble s);
inline ChiFactor chi_factor(cdouble s) { return {s, chi(s)}; }

// ---------------------------------------------------------------------------
// theta(t) = Im log Gamma(1/4 + it/2) - (t/2) log pi, so Z(t) = e^{i theta(t)} zeta(1/2+it).

/// Evaluated in extended precision; absolute error <= 1e-10 for |t| <= 1e8.
/// Odd in t.
double theta_exact(double t);

/// t/2 log(t/2pi) - t/2 - pi/8.
double theta_main_terms(double t);

struct DeltaIntegral {
  double value = 0.0;
  double tail_error = 0.0;  // magnitude of the first omitted tail term
  int intervals = 0;        // unit intervals summed before the analytic tail
};

/// Delta(t) = theta(t) - theta_main_terms(t), from the integral representation
///   t/4 log(1 + 1/(4t^2)) + 1/4 arctan(1/(2t))
///     + t/2 int_0^inf psi(u) du / ((u + 1/4)^2 + t^2/4),   psi(u) = u - [u] - 1/2.
/// Requires t > 0.
DeltaIntegral delta_integral_detail(double t);
double delta_integral(double t);

/// Asymptotic series Delta(t) ~ sum_n c_n t^{1-2n}.
struct ThetaExpansion {
  struct Term {
    double coefficient;
    int power;  // 1 - 2n
  };
  std::vector<Term> terms;
  int order = 0;

  /// Coefficients c_n = (1 - 2^{1-2n}) |B_2n| / (4n(2n-1)), n = 1..order (order <= 14).
  static ThetaExpansion classical(int order);

  double delta(double t) const;
  /// |c_n t^{1-2n}| for any n >= 1 (not limited to the truncation order).
  static double term_magnitude(int n, double t);
};

/// Alternative coefficient of t^{1-2n},
/// (2^{2n}-1)|B_2n| / (2^{2n}(2n-1)2n). Differs from the classical one; kept
/// for reporting.
double printed_series_coefficient(int n);
double classical_series_coefficient(int n);

double theta_asymptotic(double t, int order);

/// k-th derivative of theta (0 <= k <= 4) from the differentiated asymptotic
/// series. Requires t >= 10.
double theta_derivative(double t, int k);

/// theta, theta', theta'' at any t > 0 via digamma/trigamma.
struct ThetaJet {
  double theta;
  double d1;
  double d2;
};
ThetaJet theta_jet(double t);

/// Fits the leading coefficient of Delta(t) from the integral (t Delta(t) as
/// t grows, Richardson-extrapolated) and compares it with the classical and
/// printed values.
struct LeadingCoefficientFit {
  double fitted = 0.0;
  double classical = 1.0 / 48.0;
  double printed = 1.0 / 16.0;
  bool matches_classical = false;
  bool matches_printed = false;
};
LeadingCoefficientFit fit_leading_delta_coefficient();

}  // namespace hz

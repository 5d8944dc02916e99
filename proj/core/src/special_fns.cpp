#include "hardyz/special_fns.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "hardyz/compensated_sum.hpp"
#include "hardyz/error.hpp"
#include "hardyz/quadrature.hpp"

namespace hz {
namespace {

constexpr double kPi = std::numbers::pi;

constexpr std::array<Rational, 31> kBernoulli = {{
    {1, 1},
    {-1, 2},
    {1, 6},
    {0, 1},
    {-1, 30},
    {0, 1},
    {1, 42},
    {0, 1},
    {-1, 30},
    {0, 1},
    {5, 66},
    {0, 1},
    {-691, 2730},
    {0, 1},
    {7, 6},
    {0, 1},
    {-3617, 510},
    {0, 1},
    {43867, 798},
    {0, 1},
    {-174611, 330},
    {0, 1},
    {854513, 138},
    {0, 1},
    {-236364091, 2730},
    {0, 1},
    {8553103, 6},
    {0, 1},
    {-23749461029LL, 870},
    {0, 1},
    {8615841276005LL, 14322},
}};

bool is_nonpositive_integer(cdouble z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// Stirling series for log Gamma on an argument already shifted to |z| >= r_min
// with Re z > 0. Real is double or long double.
template <class Real>
std::complex<Real> log_gamma_shifted(std::complex<Real> z, Real r_min, int terms) {
  using C = std::complex<Real>;
  C shift{};
  while (std::abs(z) < r_min || z.real() < Real(0.5)) {
    shift += std::log(z);
    z += Real(1);
  }
  const Real half_log_2pi = Real(0.5) * std::log(Real(2) * std::numbers::pi_v<Real>);
  C res = (z - Real(0.5)) * std::log(z) - z + half_log_2pi;
  const C inv = Real(1) / z;
  const C inv2 = inv * inv;
  C pw = inv;
  for (int k = 1; k <= terms; ++k) {
    const Rational b = kBernoulli[2 * k];
    const Real coeff = static_cast<Real>(b.num) /
                       (static_cast<Real>(b.den) * Real(2 * k) * Real(2 * k - 1));
    res += coeff * pw;
    pw *= inv2;
  }
  return res - shift;
}

}  // namespace

Rational bernoulli(int n) {
  if (n < 0 || n > 30) throw UsageError("bernoulli: index must be in [0, 30]");
  return kBernoulli[static_cast<std::size_t>(n)];
}

double bernoulli_value(int n) { return bernoulli(n).value(); }

cdouble log_gamma(cdouble z) {
  if (is_nonpositive_integer(z)) throw DomainError("log_gamma: pole at non-positive integer");
  return log_gamma_shifted<double>(z, 15.0, 10);
}

cdouble digamma(cdouble z) {
  if (is_nonpositive_integer(z)) throw DomainError("digamma: pole at non-positive integer");
  cdouble shift{};
  while (std::abs(z) < 15.0 || z.real() < 0.5) {
    shift -= 1.0 / z;
    z += 1.0;
  }
  const cdouble inv = 1.0 / z;
  const cdouble inv2 = inv * inv;
  cdouble res = std::log(z) - 0.5 * inv;
  cdouble pw = inv2;
  for (int k = 1; k <= 10; ++k) {
    res -= bernoulli_value(2 * k) / (2.0 * k) * pw;
    pw *= inv2;
  }
  return res + shift;
}

cdouble trigamma(cdouble z) {
  if (is_nonpositive_integer(z)) throw DomainError("trigamma: pole at non-positive integer");
  cdouble shift{};
  while (std::abs(z) < 15.0 || z.real() < 0.5) {
    shift += 1.0 / (z * z);
    z += 1.0;
  }
  const cdouble inv = 1.0 / z;
  const cdouble inv2 = inv * inv;
  cdouble res = inv + 0.5 * inv2;
  cdouble pw = inv2 * inv;
  for (int k = 1; k <= 10; ++k) {
    res += bernoulli_value(2 * k) * pw;
    pw *= inv2;
  }
  return res + shift;
}

cdouble log_sin(cdouble w) {
  const cdouble i(0.0, 1.0);
  if (w.imag() > 2.0) return -i * w + std::log((std::exp(2.0 * i * w) - 1.0) / (2.0 * i));
  if (w.imag() < -2.0) return i * w + std::log((1.0 - std::exp(-2.0 * i * w)) / (2.0 * i));
  return std::log(std::sin(w));
}

cdouble log_cos(cdouble w) {
  const cdouble i(0.0, 1.0);
  if (w.imag() > 2.0) return -i * w + std::log((1.0 + std::exp(2.0 * i * w)) / 2.0);
  if (w.imag() < -2.0) return i * w + std::log((1.0 + std::exp(-2.0 * i * w)) / 2.0);
  return std::log(std::cos(w));
}

namespace {
cdouble chi_direct(cdouble s) {
  const cdouble l = s * std::log(2.0) + (s - 1.0) * std::log(kPi) + log_sin(kPi * s / 2.0) +
                    log_gamma(1.0 - s);
  return std::exp(l);
}
}  // namespace

cdouble chi(cdouble s) {
  if (s.imag() == 0.0 && s.real() >= 1.0 && s.real() == std::floor(s.real())) {
    const auto n = static_cast<long long>(s.real());
    if (n % 2 == 1) throw DomainError("chi: pole at positive odd integer");
    // sin zero cancels the Gamma pole; use chi(s) = 1/chi(1-s).
    return 1.0 / chi_direct(1.0 - s);
  }
  return chi_direct(s);
}

double theta_exact(double t) {
  if (t < 0.0) return -theta_exact(-t);
  if (t == 0.0) return 0.0;
  using LD = long double;
  const std::complex<LD> z(0.25L, static_cast<LD>(t) / 2.0L);
  const std::complex<LD> lg = log_gamma_shifted<LD>(z, 20.0L, 12);
  return static_cast<double>(lg.imag() - static_cast<LD>(t) / 2.0L * std::log(std::numbers::pi_v<LD>));
}

double theta_main_terms(double t) {
  using LD = long double;
  const LD tl = t;
  const LD v = tl / 2.0L * std::log(tl / (2.0L * std::numbers::pi_v<LD>)) - tl / 2.0L -
               std::numbers::pi_v<LD> / 8.0L;
  return static_cast<double>(v);
}

DeltaIntegral delta_integral_detail(double t) {
  if (!(t > 0.0)) throw UsageError("delta_integral: t must be positive");
  const double tau = t / 2.0;
  const double tau2 = tau * tau;
  auto denom = [&](double u) { return (u + 0.25) * (u + 0.25) + tau2; };

  // On [k, k+1] with midpoint m: psi(u) = u - m and int psi = 0, so
  // int psi g = int psi (g(u) - g(m)) = -int v^2 (2m + 1/2 + v) / (D(m+v) D(m)) dv,
  // a one-signed integrand with no cancellation.
  auto interval = [&](int k) {
    const double m = k + 0.5;
    const double dm = denom(m);
    auto h = [&](double v) { return -v * v * (2.0 * m + 0.5 + v) / (denom(m + v) * dm); };
    if (k == 0) {
      QuadOptions o;
      o.abs_tol = 1e-18;
      o.rel_tol = 1e-15;
      return integrate(h, -0.5, 0.5, o).value;
    }
    return gauss_kronrod_15(h, -0.5, 0.5).first;
  };

  constexpr int kIntervals = 64;
  CompensatedSum sum;
  for (int k = 0; k < kIntervals; ++k) sum.add(interval(k));

  // Tail int_U^inf psi g = sum_{j odd} -B_{j+1}/(j+1)! g^{(j-1)}(U), with
  // g^{(n)}(u) = Im[(-1)^n n! (x - i tau)^{-n-1}] / tau,  x = u + 1/4.
  const double U = kIntervals;
  const cdouble xi(U + 0.25, -tau);
  auto gderiv = [&](int n) {
    double fact = 1.0;
    for (int i = 2; i <= n; ++i) fact *= i;
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    return (sign * fact * std::pow(xi, -(n + 1))).imag() / tau;
  };
  auto tail_term = [&](int j) {
    double fact = 1.0;
    for (int i = 2; i <= j + 1; ++i) fact *= i;
    return -bernoulli_value(j + 1) / fact * gderiv(j - 1);
  };
  for (int j = 1; j <= 7; j += 2) sum.add(tail_term(j));

  DeltaIntegral out;
  out.intervals = kIntervals;
  out.tail_error = std::abs(t / 2.0 * tail_term(9));
  out.value = t / 4.0 * std::log1p(1.0 / (4.0 * t * t)) + 0.25 * std::atan(1.0 / (2.0 * t)) +
              t / 2.0 * sum.value();
  return out;
}

double delta_integral(double t) { return delta_integral_detail(t).value; }

double classical_series_coefficient(int n) {
  if (n < 1 || n > 15) throw UsageError("theta series: n must be in [1, 15]");
  const double b = std::abs(bernoulli_value(2 * n));
  return (1.0 - std::ldexp(1.0, 1 - 2 * n)) * b / (4.0 * n * (2.0 * n - 1.0));
}

double printed_series_coefficient(int n) {
  if (n < 1 || n > 15) throw UsageError("theta series: n must be in [1, 15]");
  const double b = std::abs(bernoulli_value(2 * n));
  const double p = std::ldexp(1.0, 2 * n);
  return (p - 1.0) * b / (p * (2.0 * n - 1.0) * 2.0 * n);
}

ThetaExpansion ThetaExpansion::classical(int order) {
  if (order < 1 || order > 14) throw UsageError("ThetaExpansion: order must be in [1, 14]");
  ThetaExpansion e;
  e.order = order;
  for (int n = 1; n <= order; ++n) e.terms.push_back({classical_series_coefficient(n), 1 - 2 * n});
  return e;
}

double ThetaExpansion::delta(double t) const {
  // Smallest terms first.
  double acc = 0.0;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it)
    acc += it->coefficient * std::pow(t, it->power);
  return acc;
}

double ThetaExpansion::term_magnitude(int n, double t) {
  return std::abs(classical_series_coefficient(n) * std::pow(t, 1 - 2 * n));
}

double theta_asymptotic(double t, int order) {
  return theta_main_terms(t) + ThetaExpansion::classical(order).delta(t);
}

double theta_derivative(double t, int k) {
  if (k < 0 || k > 4) throw UsageError("theta_derivative: k must be in [0, 4]");
  if (t < 10.0) throw UsageError("theta_derivative: asymptotic regime requires t >= 10");
  if (k == 0) return theta_asymptotic(t, 8);
  double main = 0.0;
  switch (k) {
    case 1: main = 0.5 * std::log(t / (2.0 * kPi)); break;
    case 2: main = 0.5 / t; break;
    case 3: main = -0.5 / (t * t); break;
    case 4: main = 1.0 / (t * t * t); break;
  }
  // d^k/dt^k c t^p = c p(p-1)...(p-k+1) t^{p-k}
  double delta = 0.0;
  for (int n = 8; n >= 1; --n) {
    const int p = 1 - 2 * n;
    double falling = 1.0;
    for (int i = 0; i < k; ++i) falling *= (p - i);
    delta += classical_series_coefficient(n) * falling * std::pow(t, p - k);
  }
  return main + delta;
}

ThetaJet theta_jet(double t) {
  const cdouble z(0.25, t / 2.0);
  ThetaJet j{};
  j.theta = theta_exact(t);
  j.d1 = 0.5 * digamma(z).real() - 0.5 * std::log(kPi);
  j.d2 = -0.25 * trigamma(z).imag();
  return j;
}

LeadingCoefficientFit fit_leading_delta_coefficient() {
  // t Delta(t) = c1 + c2 t^{-2} + O(t^{-4}); eliminate c2 from two heights.
  const double t1 = 200.0;
  const double t2 = 400.0;
  const double y1 = t1 * delta_integral(t1);
  const double y2 = t2 * delta_integral(t2);
  LeadingCoefficientFit fit;
  fit.fitted = (t2 * t2 * y2 - t1 * t1 * y1) / (t2 * t2 - t1 * t1);
  fit.matches_classical = std::abs(fit.fitted - fit.classical) <= 1e-6 * fit.classical;
  fit.matches_printed = std::abs(fit.fitted - fit.printed) <= 1e-6 * fit.printed;
  return fit;
}

}  // namespace hz

#pragma once

// Generic Euler-Maclaurin evaluation of Hurwitz zeta sums. The scalar S is
// either std::complex<double> or a Jet over it, so the same code gives values
// and s-derivatives.

#include <cmath>
#include <complex>
#include <span>

#include "hardyz/compensated_sum.hpp"
#include "hardyz/jet.hpp"
#include "hardyz/special_fns.hpp"

namespace hz::detail {

template <class S>
struct Accumulator;

template <>
struct Accumulator<std::complex<double>> {
  ComplexCompensatedSum sum;
  void add(const std::complex<double>& z) { sum.add(z); }
  std::complex<double> value() const { return sum.value(); }
};

template <std::size_t N>
struct Accumulator<Jet<std::complex<double>, N>> {
  std::array<ComplexCompensatedSum, N> sums;
  void add(const Jet<std::complex<double>, N>& z) {
    for (std::size_t i = 0; i < N; ++i) sums[i].add(z.c[i]);
  }
  Jet<std::complex<double>, N> value() const {
    Jet<std::complex<double>, N> r;
    for (std::size_t i = 0; i < N; ++i) r.c[i] = sums[i].value();
    return r;
  }
};

inline int em_cutoff(std::complex<double> s) {
  return static_cast<int>(std::ceil(1.3 * std::abs(s.imag()) + 30.0 +
                                    std::max(0.0, -s.real())));
}

inline constexpr int kEmCorrections = 10;  // through B_20

// (x)^{-s} for real x > 0.
template <class S>
S real_pow_neg(double x, const S& s) {
  using std::exp;
  return exp(s * std::complex<double>(-std::log(x), 0.0));
}

// Euler-Maclaurin tail beyond the pole term:
//   1/2 (N+a)^{-s} + sum_k B_2k/(2k)! s(s+1)..(s+2k-2) (N+a)^{-s-2k+1}.
template <class S>
S em_tail(const S& s, double x) {
  const S base = real_pow_neg(x, s);
  S res = base * std::complex<double>(0.5, 0.0);
  S rising = s;              // s(s+1)...(s+2k-2)
  S pw = base / std::complex<double>(x, 0.0);  // (N+a)^{-s-1}
  const double inv_x2 = 1.0 / (x * x);
  double fact = 2.0;         // (2k)!
  for (int k = 1; k <= kEmCorrections; ++k) {
    const double coeff = bernoulli_value(2 * k) / fact;
    res += rising * pw * std::complex<double>(coeff, 0.0);
    rising = rising * (s + std::complex<double>(2.0 * k - 1.0, 0.0)) *
             (s + std::complex<double>(2.0 * k, 0.0));
    pw = pw * std::complex<double>(inv_x2, 0.0);
    fact *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
  }
  return res;
}

// sum_{n=0}^{N-1} (n+a)^{-s}, ascending, compensated.
template <class S>
S head_sum(const S& s, double a, int n_terms) {
  Accumulator<S> acc;
  for (int n = 0; n < n_terms; ++n) acc.add(real_pow_neg(n + a, s));
  return acc.value();
}

// Full Hurwitz zeta with explicit pole term (N+a)^{1-s}/(s-1).
template <class S>
S hurwitz(const S& s, double a) {
  const int n = em_cutoff(jet_value(s));
  const double x = n + a;
  const std::complex<double> one(1.0, 0.0);
  const S pole = real_pow_neg(x, s) * std::complex<double>(x, 0.0) / (s - one);
  return head_sum(s, a, n) + pole + em_tail(s, x);
}

// (e^z - 1)/z, accurate near z = 0.
template <class S>
S expm1_over_z(const S& z) {
  using std::exp;
  if (std::abs(jet_value(z)) < 0.5) {
    S r(std::complex<double>(1.0, 0.0));
    for (int k = 25; k >= 1; --k)
      r = std::complex<double>(1.0, 0.0) + z * r / std::complex<double>(k + 1.0, 0.0);
    return r;
  }
  return (exp(z) - std::complex<double>(1.0, 0.0)) / z;
}

// sum_i c_i zeta(s, a_i) with sum c_i = 0; pole terms combined analytically:
//   sum c_i x_i^{1-s}/(s-1) = -sum c_i log(x_i) E((1-s) log x_i),  E(z) = (e^z-1)/z.
template <class S>
S hurwitz_combination(const S& s, std::span<const double> coeffs, std::span<const double> a) {
  const int n = em_cutoff(jet_value(s));
  const std::complex<double> one(1.0, 0.0);
  Accumulator<S> acc;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0.0) continue;
    const double x = n + a[i];
    const double lx = std::log(x);
    const S w = (one - s) * std::complex<double>(lx, 0.0);
    const S pole = expm1_over_z(w) * std::complex<double>(-lx, 0.0);
    const S part = head_sum(s, a[i], n) + pole + em_tail(s, x);
    acc.add(part * std::complex<double>(coeffs[i], 0.0));
  }
  return acc.value();
}

}  // namespace hz::detail

#pragma once

#include <array>
#include <complex>
#include <cstddef>

namespace hz {

/// Truncated Taylor expansion f(x0 + e) = c[0] + c[1] e + ... + c[N-1] e^{N-1}.
///
/// Used to push first and second derivatives through the Euler-Maclaurin
/// evaluators without duplicating them. Arithmetic is exact on the truncated
/// polynomial ring.
template <class T, std::size_t N>
struct Jet {
  static_assert(N >= 1);
  std::array<T, N> c{};

  constexpr Jet() = default;
  constexpr Jet(T value) { c[0] = value; }  // NOLINT(google-explicit-constructor)

  static constexpr Jet variable(T value) {
    Jet j(value);
    if constexpr (N > 1) j.c[1] = T(1);
    return j;
  }

  constexpr const T& value() const { return c[0]; }
  /// k-th derivative (k! * c[k]).
  constexpr T derivative(std::size_t k) const {
    T r = c[k];
    for (std::size_t i = 2; i <= k; ++i) r *= static_cast<double>(i);
    return r;
  }

  Jet& operator+=(const Jet& o) {
    for (std::size_t i = 0; i < N; ++i) c[i] += o.c[i];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    for (std::size_t i = 0; i < N; ++i) c[i] -= o.c[i];
    return *this;
  }
  Jet& operator*=(const T& s) {
    for (auto& v : c) v *= s;
    return *this;
  }
  Jet& operator*=(const Jet& o) { return *this = *this * o; }
  Jet& operator/=(const Jet& o) { return *this = *this / o; }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator-(Jet a) {
    for (auto& v : a.c) v = -v;
    return a;
  }
  friend Jet operator+(Jet a, const T& s) {
    a.c[0] += s;
    return a;
  }
  friend Jet operator+(const T& s, Jet a) { return a + s; }
  friend Jet operator-(Jet a, const T& s) {
    a.c[0] -= s;
    return a;
  }
  friend Jet operator-(const T& s, const Jet& a) { return -a + s; }
  friend Jet operator*(Jet a, const T& s) { return a *= s; }
  friend Jet operator*(const T& s, Jet a) { return a *= s; }
  friend Jet operator/(Jet a, const T& s) {
    for (auto& v : a.c) v /= s;
    return a;
  }

  friend Jet operator*(const Jet& a, const Jet& b) {
    Jet r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; i + j < N; ++j) r.c[i + j] += a.c[i] * b.c[j];
    return r;
  }

  friend Jet operator/(const Jet& a, const Jet& b) {
    Jet r;
    const T inv = T(1) / b.c[0];
    for (std::size_t k = 0; k < N; ++k) {
      T acc = a.c[k];
      for (std::size_t j = 1; j <= k; ++j) acc -= b.c[j] * r.c[k - j];
      r.c[k] = acc * inv;
    }
    return r;
  }
  friend Jet operator/(const T& s, const Jet& b) { return Jet(s) / b; }
};

template <class T, std::size_t N>
Jet<T, N> exp(const Jet<T, N>& a) {
  using std::exp;
  Jet<T, N> r;
  r.c[0] = exp(a.c[0]);
  // r' = a' r  =>  k r_k = sum_{j=1..k} j a_j r_{k-j}
  for (std::size_t k = 1; k < N; ++k) {
    T acc{};
    for (std::size_t j = 1; j <= k; ++j) acc += static_cast<double>(j) * a.c[j] * r.c[k - j];
    r.c[k] = acc / static_cast<double>(k);
  }
  return r;
}

template <class T, std::size_t N>
Jet<T, N> log(const Jet<T, N>& a) {
  using std::log;
  Jet<T, N> r;
  r.c[0] = log(a.c[0]);
  // a r' = a'  =>  k a_0 r_k = k a_k - sum_{j=1..k-1} j r_j a_{k-j}
  for (std::size_t k = 1; k < N; ++k) {
    T acc = static_cast<double>(k) * a.c[k];
    for (std::size_t j = 1; j < k; ++j) acc -= static_cast<double>(j) * r.c[j] * a.c[k - j];
    r.c[k] = acc / (static_cast<double>(k) * a.c[0]);
  }
  return r;
}

// Value of the leading coefficient; lets generic code ask |x| of a jet.
template <class T, std::size_t N>
const T& jet_value(const Jet<T, N>& j) { return j.c[0]; }
inline const std::complex<double>& jet_value(const std::complex<double>& z) { return z; }

}  // namespace hz

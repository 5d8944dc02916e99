#include "hardyz/arithmetic.hpp"

#include <cmath>
#include <cstdlib>

#include "hardyz/error.hpp"
#include "hardyz/moments.hpp"
#include "hardyz/quadrature.hpp"

namespace hz {

int MertensTable::mobius(std::int64_t n) const {
  if (n < 1 || n > N) throw UsageError("mobius: n outside the table");
  return mu[static_cast<std::size_t>(n)];
}

std::int64_t MertensTable::mertens(std::int64_t x) const {
  if (x < 0 || x > N) throw UsageError("mertens: x outside the table");
  return M[static_cast<std::size_t>(x)];
}

MertensTable mobius_sieve(std::int64_t N) {
  if (N < 1 || N > 100'000'000) throw UsageError("mobius_sieve: requires 1 <= N <= 1e8");
  const auto n = static_cast<std::size_t>(N);
  MertensTable t;
  t.N = N;
  t.mu.assign(n + 1, 0);
  t.M.assign(n + 1, 0);
  // acc[m] collects mu(d) over proper divisors d found so far. Partial sums are
  // bounded by the divisor count, far below the int16 range for m <= 1e8.
  std::vector<std::int16_t> acc(n + 1, 0);
  for (std::size_t d = 1; d <= n; ++d) {
    const int m = d == 1 ? 1 : -acc[d];
    t.mu[d] = static_cast<std::int8_t>(m);
    t.M[d] = t.M[d - 1] + m;
    if (m == 0) continue;
    for (std::size_t k = 2 * d; k <= n; k += d) acc[k] = static_cast<std::int16_t>(acc[k] + m);
  }
  return t;
}

std::int64_t divisor_sum_violation(const MertensTable& table, std::int64_t n_max) {
  if (n_max < 1 || n_max > table.N) throw UsageError("divisor_sum_violation: n_max outside the table");
  const auto n = static_cast<std::size_t>(n_max);
  std::vector<std::int32_t> s(n + 1, 0);
  for (std::size_t d = 1; d <= n; ++d) {
    const int m = table.mu[d];
    if (m == 0) continue;
    for (std::size_t k = d; k <= n; k += d) s[k] += m;
  }
  for (std::size_t k = n; k >= 1; --k)
    if (s[k] != (k == 1 ? 1 : 0)) return static_cast<std::int64_t>(k);
  return 0;
}

bool check_1_7(const MertensTable& table, std::int64_t N, int k) {
  if (N < 1 || k < 1) throw UsageError("check_1_7: requires N, k >= 1");
  const std::int64_t m = table.mertens(N);
  if (m == 0) return true;
  const double lhs = 2.0 * k * std::log(static_cast<double>(std::llabs(m)));
  const double rhs = (k + 1.0) * std::log(static_cast<double>(N));
  return lhs <= rhs + 1e-12 * std::max(1.0, rhs);
}

bool check_1_7(std::int64_t N, int k) {
  if (N < 1 || k < 1) throw UsageError("check_1_7: requires N, k >= 1");
  return check_1_7(mobius_sieve(N), N, k);
}

MertensScan mertens_sqrt_scan(const MertensTable& table) {
  MertensScan r;
  r.limit = table.N;
  for (std::int64_t x = 2; x <= table.N; ++x) {
    const double ratio = std::abs(static_cast<double>(table.M[static_cast<std::size_t>(x)])) /
                         std::sqrt(static_cast<double>(x));
    if (ratio > r.max_ratio) {
      r.max_ratio = ratio;
      r.argmax = x;
    }
  }
  r.below_sqrt = r.max_ratio < 1.0;
  return r;
}

namespace {

std::vector<char> composite_flags(std::int64_t N) {
  const auto n = static_cast<std::size_t>(N);
  std::vector<char> comp(n + 1, 0);
  comp[0] = 1;
  if (n >= 1) comp[1] = 1;
  for (std::size_t p = 2; p * p <= n; ++p)
    if (!comp[p])
      for (std::size_t k = p * p; k <= n; k += p) comp[k] = 1;
  return comp;
}

}  // namespace

std::int64_t pi_count(std::int64_t x) {
  if (x < 2 || x > 100'000'000) throw UsageError("pi_count: requires 2 <= x <= 1e8");
  const auto comp = composite_flags(x);
  std::int64_t c = 0;
  for (char f : comp) c += !f;
  return c;
}

std::vector<std::int32_t> pi_table(std::int64_t N) {
  if (N < 0 || N > 100'000'000) throw UsageError("pi_table: requires 0 <= N <= 1e8");
  const auto comp = composite_flags(N);
  std::vector<std::int32_t> pi(comp.size(), 0);
  std::int32_t c = 0;
  for (std::size_t i = 0; i < comp.size(); ++i) {
    c += !comp[i];
    pi[i] = c;
  }
  return pi;
}

LiValue li_detail(double x, int terms) {
  if (!(x >= 2.0) || !std::isfinite(x)) throw UsageError("li: requires finite x >= 2");
  if (terms < 1 || terms > 20) throw UsageError("li: terms must be in [1, 20]");
  LiValue r;
  r.x = x;
  r.terms = terms;
  // With t = e^v the principal value is gamma + log u + int_0^u (e^v - 1)/v dv,
  // u = log x; the integrand is smooth at v = 0.
  const double u = std::log(x);
  QuadOptions o;
  o.abs_tol = 1e-15;
  o.rel_tol = 1e-15;
  const QuadResult q = integrate(
      [](double v) { return v == 0.0 ? 1.0 : std::expm1(v) / v; }, 0.0, u, o);
  if (!q.converged) throw NumericError("li: quadrature did not converge");
  r.value = kEulerGamma + std::log(u) + q.value;
  r.quad_error = q.abs_error;

  double term = x / u;  // (n-1)! x / u^n at n = 1
  for (int n = 1; n <= terms; ++n) {
    r.asymptotic += term;
    term *= n / u;
  }
  r.envelope = 2.0 * term;
  return r;
}

double li(double x) { return li_detail(x).value; }

}  // namespace hz

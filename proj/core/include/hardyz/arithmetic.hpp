#pragma once

#include <cstdint>
#include <vector>

namespace hz {

/// mu[n] and M[n] for 0 <= n <= N (index 0 holds 0).
struct MertensTable {
  std::int64_t N = 0;
  std::vector<std::int8_t> mu;
  std::vector<std::int32_t> M;

  int mobius(std::int64_t n) const;
  std::int64_t mertens(std::int64_t x) const;
};

/// Builds mu from mu(1) = 1, mu(n) = -sum_{d | n, d < n} mu(d), pushed forward
/// to multiples. O(N log N). Requires 1 <= N <= 1e8.
MertensTable mobius_sieve(std::int64_t N);

/// Largest n <= n_max with sum_{d | n} mu(d) != [n == 1], or 0 if none.
std::int64_t divisor_sum_violation(const MertensTable& table, std::int64_t n_max);

/// M(N)^{2k} <= N^{k+1}, compared in logs. M(N) = 0 is trivially true.
bool check_1_7(const MertensTable& table, std::int64_t N, int k);
bool check_1_7(std::int64_t N, int k);

struct MertensScan {
  std::int64_t limit = 0;
  double max_ratio = 0.0;  // max |M(x)| / sqrt(x) over 2 <= x <= limit
  std::int64_t argmax = 0;
  bool below_sqrt = true;  // fails for some enormous x; holds at this scale
};
MertensScan mertens_sqrt_scan(const MertensTable& table);

/// Exact count of primes <= x by Eratosthenes. Requires 2 <= x <= 1e8.
std::int64_t pi_count(std::int64_t x);

/// pi(n) for every 0 <= n <= N.
std::vector<std::int32_t> pi_table(std::int64_t N);

struct LiValue {
  double x = 0.0;
  double value = 0.0;        // principal value of int_0^x dt / log t
  double asymptotic = 0.0;   // sum_{n=1}^{terms} (n-1)! x / log^n x
  int terms = 0;
  double envelope = 0.0;     // 2 terms! x / log^{terms+1} x
  double quad_error = 0.0;
};

/// Requires x >= 2 and 1 <= terms <= 20.
LiValue li_detail(double x, int terms = 3);
double li(double x);

}  // namespace hz

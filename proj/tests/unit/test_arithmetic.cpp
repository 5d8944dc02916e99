#include <cmath>
#include <vector>

#include "doctest.h"
#include "hardyz/arithmetic.hpp"
#include "hardyz/error.hpp"
#include "oracles.hpp"

using namespace hz;

namespace {

// Linear sieve: mu from the smallest-prime-factor recursion.
std::vector<int> linear_sieve_mu(int n) {
  std::vector<int> mu(n + 1, 0), primes;
  std::vector<char> comp(n + 1, 0);
  mu[1] = 1;
  for (int i = 2; i <= n; ++i) {
    if (!comp[i]) {
      primes.push_back(i);
      mu[i] = -1;
    }
    for (int p : primes) {
      if (static_cast<long>(p) * i > n) break;
      comp[p * i] = 1;
      if (i % p == 0) {
        mu[p * i] = 0;
        break;
      }
      mu[p * i] = -mu[i];
    }
  }
  return mu;
}

}  // namespace

TEST_CASE("small Moebius values") {
  const MertensTable t = mobius_sieve(100);
  CHECK(t.mobius(1) == 1);
  CHECK(t.mobius(2) == -1);
  CHECK(t.mobius(4) == 0);
  CHECK(t.mobius(6) == 1);
  CHECK(t.mertens(1) == 1);
  CHECK(t.mertens(10) == -1);
  CHECK(t.mertens(100) == 1);
  CHECK_THROWS_AS(t.mobius(101), UsageError);
  CHECK_THROWS_AS(mobius_sieve(0), UsageError);
}

TEST_CASE("divisor recursion agrees with the linear sieve") {
  const int n = 1000000;
  const MertensTable t = mobius_sieve(n);
  const auto ref = linear_sieve_mu(n);
  long mismatches = 0;
  for (int i = 1; i <= n; ++i) mismatches += t.mobius(i) != ref[i];
  CHECK(mismatches == 0);
}

TEST_CASE("divisor sums vanish") {
  const MertensTable t = mobius_sieve(100000);
  CHECK(divisor_sum_violation(t, 100000) == 0);
  // trial division for a few values
  for (int n : {2, 12, 30, 97, 360, 9240, 99999}) {
    int s = 0;
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) s += t.mobius(d);
    CHECK(s == 0);
  }
}

TEST_CASE("Mertens growth inequality") {
  const MertensTable t = mobius_sieve(1000000);
  CHECK(check_1_7(t, 100, 1));
  long failures = 0;
  for (long N = 1; N <= 1000000; ++N)
    for (int k = 1; k <= 3; ++k) failures += !check_1_7(t, N, k);
  CHECK(failures == 0);
  CHECK(t.mertens(2) == 0);
  CHECK(check_1_7(t, 2, 3));
  CHECK(check_1_7(1000000, 3));
  CHECK_THROWS_AS(check_1_7(t, 100, 0), UsageError);
}

TEST_CASE("|M(x)| < sqrt(x) at this scale") {
  const MertensScan s = mertens_sqrt_scan(mobius_sieve(1000000));
  CHECK(s.below_sqrt);
  CHECK(s.argmax == 5);
}

TEST_CASE("prime counts") {
  CHECK(pi_count(10) == 4);
  CHECK(pi_count(100) == 25);
  CHECK(pi_count(1000000) == 78498);
  const auto table = pi_table(1000);
  CHECK(table[2] == 1);
  CHECK(table[1000] == 168);
  CHECK_THROWS_AS(pi_count(1), UsageError);
}

TEST_CASE("logarithmic integral") {
  CHECK(std::abs(li(2.0) - oracle::kLi2) < 1e-13);
  CHECK(std::abs(li(1e6) - oracle::kLi1e6) < 1e-8);
  CHECK_THROWS_AS(li(1.5), UsageError);
}

TEST_CASE("li against its power series") {
  for (double x : {2.0, 10.0, 1000.0, 1e8}) {
    const long double u = std::log(static_cast<long double>(x));
    long double term = 1.0L, sum = 0.0L;
    for (int k = 1; k < 200; ++k) {
      term *= u / k;
      sum += term / k;
    }
    const long double series = 0.57721566490153286061L + std::log(u) + sum;
    CHECK(std::abs(li(x) - static_cast<double>(series)) < 1e-13 * std::max(1.0, li(x)));
  }
}

TEST_CASE("asymptotic expansion envelope") {
  for (int N = 1; N <= 3; ++N) {
    const LiValue v = li_detail(1e6, N);
    const double L = std::log(1e6);
    double fact = 1.0;
    for (int j = 2; j <= N; ++j) fact *= j;
    CHECK(v.envelope == doctest::Approx(2.0 * fact * 1e6 / std::pow(L, N + 1)));
    CHECK(std::abs(v.value - v.asymptotic) <= v.envelope);
  }
}

TEST_CASE("li exceeds pi on a sample grid") {
  const auto pi = pi_table(1000000);
  for (long x = 2; x <= 1000000; x += (x < 1000 ? 1 : 97)) CHECK(li(static_cast<double>(x)) > pi[x]);
}

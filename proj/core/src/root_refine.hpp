#pragma once

// Sign-change root refinement shared by the Z and Davenport-Heilbronn scans.

#include <cmath>
#include <functional>

#include "hardyz/error.hpp"

namespace hz::detail {

struct Bracket {
  double lo;
  double hi;
  double root;
  double value;  // function value at root
};

inline Bracket refine_sign_change(const std::function<double(double)>& zo, double lo, double hi,
                                  double z_lo, double z_hi, double bracket_width) {
  if (!((z_lo < 0.0) != (z_hi < 0.0)))
    throw UsageError("refine: endpoints do not bracket a sign change");
  // Illinois false position, with a bisection step whenever the bracket fails
  // to halve, and a final two-sided probe once the estimate has settled.
  double x = lo;
  double fx = z_lo;
  int side = 0;
  double prev_x = INFINITY;
  for (int iter = 0; iter < 200 && hi - lo > bracket_width; ++iter) {
    const double width = hi - lo;
    x = (lo * z_hi - hi * z_lo) / (z_hi - z_lo);
    if (!(x > lo && x < hi)) x = 0.5 * (lo + hi);
    fx = zo(x);
    if (fx == 0.0) {
      lo = std::nextafter(x, -INFINITY);
      hi = std::nextafter(x, INFINITY);
      z_lo = zo(lo);
      z_hi = zo(hi);
      break;
    }
    if ((fx < 0.0) == (z_lo < 0.0)) {
      lo = x;
      z_lo = fx;
      if (side == -1) z_hi *= 0.5;
      side = -1;
    } else {
      hi = x;
      z_hi = fx;
      if (side == 1) z_lo *= 0.5;
      side = 1;
    }
    if (hi - lo > bracket_width && std::abs(x - prev_x) < bracket_width) {
      // Estimate has settled: probe tightly on both sides of it.
      const double d = 0.4 * bracket_width;
      const double a = std::max(lo, x - d);
      const double b = std::min(hi, x + d);
      if (a > lo && b < hi) {
        const double fa = zo(a);
        const double fb = zo(b);
        if ((fa < 0.0) != (fb < 0.0)) {
          lo = a;
          hi = b;
          z_lo = fa;
          z_hi = fb;
          break;
        }
      }
    }
    if (hi - lo > bracket_width && hi - lo > 0.5 * width) {
      const double m = 0.5 * (lo + hi);
      const double fm = zo(m);
      if ((fm < 0.0) == (z_lo < 0.0)) {
        lo = m;
        z_lo = fm;
      } else {
        hi = m;
        z_hi = fm;
      }
      side = 0;
    }
    prev_x = x;
  }
  double fl = zo(lo);
  double fh = zo(hi);
  // Adjacent doubles leave no interior point; step an endpoint outward while
  // its sign still agrees.
  for (int k = 0; k < 4 && std::nextafter(lo, hi) >= hi; ++k) {
    const double lo2 = std::nextafter(lo, -INFINITY);
    const double f2 = zo(lo2);
    if ((f2 < 0.0) == (fl < 0.0) && f2 != 0.0) {
      lo = lo2;
      fl = f2;
      continue;
    }
    const double hi2 = std::nextafter(hi, INFINITY);
    const double g2 = zo(hi2);
    if ((g2 < 0.0) == (fh < 0.0) && g2 != 0.0) {
      hi = hi2;
      fh = g2;
    }
  }
  Bracket r;
  r.lo = lo;
  r.hi = hi;
  // Secant estimate inside the final bracket (sign-correct endpoints).
  double g = lo + (hi - lo) * fl / (fl - fh);
  if (!(g > lo)) g = std::nextafter(lo, hi);
  if (!(g < hi)) g = std::nextafter(hi, lo);
  r.root = g;
  r.value = zo(g);
  return r;
}

}  // namespace hz::detail

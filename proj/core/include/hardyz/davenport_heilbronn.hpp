#pragma once

#include <string>
#include <vector>

#include "hardyz/zeta_eval.hpp"

namespace hz {

struct DHConstants {
  double theta_dh;   // arctan of tan_theta
  double tan_theta;  // (sqrt(10 - 2 sqrt 5) - 2) / (sqrt 5 - 1), from the closed form
};

/// Computed once; tan(theta_dh) agrees with tan_theta to 1e-14.
const DHConstants& dh_constants();

/// f(s) = 5^{-s} (zeta(s,1/5) + tan(theta) zeta(s,2/5) - tan(theta) zeta(s,3/5) - zeta(s,4/5)).
/// Entire: the Hurwitz poles at s = 1 cancel pairwise.
cdouble dh_f(cdouble s);
ComplexDerivs dh_f_derivs(cdouble s);

/// X(s) = 2 Gamma(1-s) cos(pi s/2) / (5^{s-1/2} (2pi)^{1-s}), so f(s) = X(s) f(1-s).
cdouble dh_X(cdouble s);
/// A logarithm of X(s), continuous in t along vertical lines with |t| > 1.3.
cdouble dh_log_X(cdouble s);

/// |f(s) - X(s) f(1-s)| / max(|f(s)|, 1e-300). Throws DomainError at Gamma poles.
double dh_functional_residual(cdouble s);

/// Z_f(t) = X(1/2+it)^{-1/2} f(1/2+it), real on the line. Throws NumericError
/// if the imaginary part exceeds 1e-9 max(1, |f|). Requires |t| >= 2.
double dh_z(double t);

struct StripZero {
  cdouble position;
  double residual = 0.0;  // |f(position)|
  bool on_line = false;   // |Re - 1/2| < 1e-9
};

struct DHSearchOptions {
  int max_depth = 40;
  double newton_residual = 1e-8;
};

struct DHSearch {
  std::vector<StripZero> zeros;
  int winding = 0;  // argument-principle count over the whole rectangle
  int cells = 0;    // cells examined during subdivision
  std::vector<std::string> diagnostics;
};

/// Winding number of f around the rectangle boundary (counter-clockwise),
/// sampled adaptively until every step turns the argument by less than pi/4
/// and agrees with its two halves. Throws NumericError if f nearly vanishes
/// on the boundary.
int dh_winding(double sigma_lo, double sigma_hi, double t_lo, double t_hi);

/// Zeros of f in the open rectangle: argument-principle count, subdivision to
/// single-zero cells, Newton refinement. Requires 0 < sigma_lo < sigma_hi < 1
/// and |t| <= 500.
DHSearch dh_zero_search_detail(double sigma_lo, double sigma_hi, double t_lo, double t_hi,
                               const DHSearchOptions& opts = {});
std::vector<StripZero> dh_zero_search(double sigma_lo, double sigma_hi, double t_lo, double t_hi);

/// Sign changes of Z_f on [t_lo, t_hi] (10 <= t_lo < t_hi <= 500), refined
/// to |f| <= 1e-8.
std::vector<StripZero> dh_line_scan(double t_lo, double t_hi);

}  // namespace hz

#pragma once

#include <string>
#include <vector>

#include "hardyz/special_fns.hpp"

namespace hz {

inline constexpr double kEulerGamma = 0.5772156649015329;

/// P_1(y) = y + 2 C_0 - 1 - log(2 pi).
double p1(double y);

struct MomentRecord {
  double T = 0.0;
  int k = 1;
  double integral = 0.0;   // int_0^T |zeta(1/2 + it)|^2 dt
  double main_term = 0.0;  // T P_1(log T)
  double e_term = 0.0;     // integral - main_term
  double abs_error = 0.0;  // quadrature error estimate
};

struct MomentOptions {
  /// Panel width as a fraction of the local mean zero gap.
  double panel_fraction = 0.5;
};

/// Requires 10 <= T <= 3000.
MomentRecord second_moment(double T, const MomentOptions& opts = {});

/// One pass over [0, max T], recording every requested height (any order).
std::vector<MomentRecord> second_moments(std::vector<double> Ts, const MomentOptions& opts = {});

enum class MuVariant { curve_4_24, curve_4_25, curve_4_26 };
const char* to_string(MuVariant v);

double mu_curve(MuVariant v, double sigma);

struct MuCurve {
  MuVariant variant;
  double operator()(double sigma) const { return mu_curve(variant, sigma); }
};

/// Exact value at a rational sigma = num/den (den > 0).
Rational mu_curve_exact(MuVariant v, Rational sigma);

struct MuCurveCheck {
  MuVariant variant;
  bool half_is_one_eighth = false;
  bool convex = false;           // second differences >= 0 on the grid
  bool nonincreasing = false;
  bool functional_relation = false;  // mu(s) - mu(1-s) = 1/2 - s on [0, 1]
  double max_breakpoint_jump = 0.0;
};

struct ConvexityReport {
  int grid_points = 1001;
  std::vector<MuCurveCheck> curves;
  bool sharpening = false;  // quadratic < piecewise-linear on (0,1) minus {1/2}
  bool all_pass() const;
};

/// Exact rational checks on 1001-point grids: sigma in [-1/2, 3/2] for shape,
/// [0, 1] for the functional relation.
ConvexityReport convexity_report();

}  // namespace hz

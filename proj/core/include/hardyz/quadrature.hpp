#pragma once

#include <functional>
#include <vector>

namespace hz {

struct QuadOptions {
  double abs_tol = 1e-13;
  double rel_tol = 1e-12;
  // Initial partition: no starting panel wider than this.
  double max_panel_width = 0.0;  // 0 = single panel
  int max_panels = 200000;
};

struct QuadResult {
  double value = 0.0;
  double abs_error = 0.0;  // sum of per-panel |G7 - K15| estimates
  long evaluations = 0;
  int panels = 0;
  bool converged = false;
};

/// Gauss-Kronrod 7/15 rule on one panel. Returns {K15, |K15 - G7|}.
std::pair<double, double> gauss_kronrod_15(const std::function<double(double)>& f, double a,
                                           double b);

/// Globally adaptive Gauss-Kronrod quadrature on [a, b]. Panels with the
/// largest error estimate are bisected until the summed estimate meets
/// max(abs_tol, rel_tol * |value|) or max_panels is reached.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadOptions& opts = {});

/// Same, with caller-supplied initial breakpoints (sorted, at least two).
QuadResult integrate(const std::function<double(double)>& f, const std::vector<double>& breaks,
                     const QuadOptions& opts = {});

}  // namespace hz

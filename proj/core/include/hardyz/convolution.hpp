#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "hardyz/gelfand_shilov.hpp"

namespace hz {

// ---------------------------------------------------------------------------
// M_{Z,f}(t) = int Z(t + x) f(x / G) dx

struct ConvValue {
  double value = 0.0;
  double abs_error = 0.0;  // quadrature estimate plus truncated-tail bound
  double radius = 0.0;     // integration over |x| <= radius
  long evaluations = 0;
};

/// Radius R with C exp(-a (R/G)^{1/alpha}) * 4 t^{1/4} = 1e-13, using the
/// fitted decay envelope of the test function.
double truncation_radius(const ConvolutionKernelSpec& spec, double t);

/// Single-point M_{Z,f}(t) by adaptive Gauss-Kronrod with panels no wider
/// than an eighth of the local zero gap. Requires t >= 20.
ConvValue m_conv_detail(double t, const ConvolutionKernelSpec& spec);
double m_conv(double t, const ConvolutionKernelSpec& spec);

/// (-1/G)^k int Z(t + x) f^{(k)}(x / G) dx, the k-th derivative of M. k <= 6.
ConvValue m_conv_derivative_detail(double t, const ConvolutionKernelSpec& spec, int k);
double m_conv_derivative(double t, const ConvolutionKernelSpec& spec, int k);

/// M^{(k)} on the grid t_start + j * spacing (0 <= j < n), by the trapezoid
/// rule on a lattice of Z samples commensurate with the grid. The lattice step
/// is at most G / (3 (b + a)), which keeps the rule free of aliasing.
struct LatticeProfile {
  std::vector<double> t;
  std::vector<double> m;
  std::vector<double> z;  // Z at the grid points
  double lattice_step = 0.0;
  double radius = 0.0;
  double quadrature_err = 0.0;  // max |M_h - M_2h| + tail bound
};
LatticeProfile convolution_lattice(const ConvolutionKernelSpec& spec, double t_start,
                                   double spacing, int n, int k = 0);

// ---------------------------------------------------------------------------
// Theorem-1 residual study

struct ProfileRow {
  double t;
  double m_value;
  double g_z_value;
  double residual;  // m_value - G Z(t)
};

struct ConvolutionProfile {
  std::vector<ProfileRow> grid;
  ConvolutionKernelSpec spec;
  double window = 0.0;  // half-width T^{1/4} (log T)^{0.6}
  double quadrature_err = 0.0;
  double max_residual_over_g = 0.0;
  bool within_hypothesis = true;  // delta < 2 pi (b - a)
};

struct Theorem1Options {
  /// When false, delta >= 2 pi (b - a) is accepted (for characterizing the
  /// breakdown) and within_hypothesis reports it.
  bool enforce_hypothesis = true;
};

/// Requires T <= 5000, n_points >= 2 and, unless disabled, delta < 2 pi (b - a).
ConvolutionProfile theorem1_residual_study(double T, int n_points, const ConvolutionKernelSpec& spec,
                                           const Theorem1Options& opts = {});

// ---------------------------------------------------------------------------
// Lemma-1 functional

struct Lemma1Result {
  double T = 0.0;
  double V = 0.0;
  double L = 0.0;  // (log T)^{0.6}
  double G = 0.0;
  double lhs = 0.0;  // int_{T-VL}^{T+VL} |M(t)| exp(-(T-t)^2/V^2) dt
  double rhs = 0.0;  // G V |f-hat((G/2pi) log sqrt(T/2pi))|
  double error_terms = 0.0;  // T^{-1/4} + V^2 T^{-3/4} L^2
  double quadrature_err = 0.0;
  double tolerance = 0.1;
  bool holds = false;           // lhs >= (1 - tolerance) rhs
  bool v_in_range = true;       // L <= V <= T^{1/3}
  std::vector<std::string> diagnostics;
};

/// Requires V >= L and 0 < G < 1. V above T^{1/3} is computed but flagged.
Lemma1Result lemma1_lower_bound(double T, double V, const ConvolutionKernelSpec& spec,
                                double tolerance = 0.1);

// ---------------------------------------------------------------------------
// Divided differences

using RealFn = std::function<double(double)>;

struct DividedDifference {
  double value = 0.0;           // [x, x_1, ..., x_n]
  double f_at_x = 0.0;
  double reconstruction = 0.0;  // (x - x_1)...(x - x_n) [x, x_1, ..., x_n]
  bool zeros_at_nodes = false;  // every F(x_j) == 0, so reconstruction == F(x)
};

/// Partial-fraction formula sum_p F(p) / prod_{q != p} (p - q) over the points
/// {x, x_1, ..., x_n}, compensated. Throws UsageError on coincident points.
DividedDifference divided_difference(const RealFn& F, std::span<const double> nodes, double x);

/// Newton triangular table; entry(i, j) = [x_i, ..., x_j].
class DividedDifferenceTable {
 public:
  DividedDifferenceTable(const RealFn& F, std::vector<double> nodes);
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& values() const { return values_; }
  double entry(std::size_t i, std::size_t j) const;
  double top() const { return entry(0, nodes_.size() - 1); }

 private:
  std::vector<double> nodes_;
  std::vector<double> values_;
  std::vector<std::vector<double>> table_;  // table_[d][i] = [x_i..x_{i+d}]
};

struct Bound75 {
  double lhs = 0.0;  // |F(x)|
  double rhs = 0.0;  // prod |x - x_k| * sup |F^{(n)}| / n!
  bool holds = false;
};

/// |F(x)| <= prod_k |x - x_k| sup |F^{(n)}| / n! for zeros x_1..x_n of F.
/// Throws UsageError if some |F(x_k)| > 1e-10.
Bound75 bound_7_5_check(const RealFn& F, std::span<const double> zeros, double x,
                        double derivative_sup);

/// max |g| over n equally spaced points of [lo, hi].
double sampled_sup(const RealFn& g, double lo, double hi, int n);

// ---------------------------------------------------------------------------
// Zero counts of Z and M

struct GapStats {
  long count = 0;
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;
};
GapStats gap_stats(const std::vector<double>& zeros);

struct ProductBoundReport {
  int centers = 0;
  int satisfied = 0;
  double max_excess = 0.0;  // max over centers of lhs - rhs
  double slack = 0.0;       // (1/pi) log(T/2pi) log_3 T / log_2 T
};

struct CountComparison {
  double T = 0.0;
  double window = 0.0;
  double H = 0.0;  // A log_3 T / log_2 T
  long n_z = 0;
  long n_m = 0;
  std::vector<double> zeros_z;
  std::vector<double> zeros_m;
  GapStats gaps_z;
  GapStats gaps_m;
  double expected_k = 0.0;  // (H / pi) log(T / 2pi)
  double mean_k = 0.0;      // mean number of M zeros in [t - H, t + H]
  ProductBoundReport product;
};

/// Zeros of Z and of M in [T - window, T + window]. Requires T <= 5000 and
/// 0 <= window <= 50.
CountComparison compare_counts(double T, double window, const ConvolutionKernelSpec& spec,
                               double A = 1.0);

}  // namespace hz

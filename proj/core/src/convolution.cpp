#include "hardyz/convolution.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hardyz/compensated_sum.hpp"
#include "hardyz/error.hpp"
#include "hardyz/parallel.hpp"
#include "hardyz/quadrature.hpp"
#include "hardyz/zero_machinery.hpp"
#include "hardyz/zeta_eval.hpp"

namespace hz {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTruncation = 1e-13;

void check_spec(const ConvolutionKernelSpec& spec) {
  if (!spec.testfn) throw UsageError("convolution: kernel spec has no test function");
  if (!(spec.G > 0.0)) throw UsageError("convolution: G must be positive");
}

double z_bound(double t) { return 4.0 * std::pow(std::max(std::abs(t), 1.0), 0.25); }

// y_R in f-argument units.
double truncation_y(const ConvolutionKernelSpec& spec, double t) {
  const DecayFit& d = spec.testfn->decay();
  const double scale = std::max(std::abs(spec.amplitude), 1.0) * d.C * z_bound(t) / kTruncation;
  return std::pow(std::log(scale) / d.a, d.alpha);
}

// Bound on int_{|y| > y_R} |Z| |f| G dy with the decay envelope (alpha = 2):
// int_Y^inf e^{-a sqrt y} dy = 2 e^{-a sqrt Y} (sqrt Y / a + 1 / a^2).
double tail_bound(const ConvolutionKernelSpec& spec, double t, double y) {
  const DecayFit& d = spec.testfn->decay();
  const double r = std::sqrt(y);
  return 2.0 * spec.G * std::abs(spec.amplitude) * z_bound(t) * d.C * 2.0 * std::exp(-d.a * r) *
         (r / d.a + 1.0 / (d.a * d.a));
}

ConvolutionKernelSpec respec(const ConvolutionKernelSpec& spec, double T) {
  return make_kernel_spec(spec.testfn, spec.delta, T, spec.amplitude);
}

double kernel_value(const ConvolutionKernelSpec& spec, double y, int k) {
  return k == 0 ? (*spec.testfn)(y) : spec.testfn->derivative(y, k);
}

ConvValue conv_quadrature(double t, const ConvolutionKernelSpec& spec, int k) {
  check_spec(spec);
  if (!(t >= 20.0)) throw UsageError("m_conv: requires t >= 20");
  if (k < 0 || k > 6) throw UsageError("m_conv_derivative: k must be in [0, 6]");
  const double G = spec.G;
  const double y_r = truncation_y(spec, t);
  const double R = G * y_r;
  const double b_a = spec.testfn->b_plateau() + spec.testfn->a_support();
  const double pre = spec.amplitude * std::pow(-1.0 / G, k);

  QuadOptions o;
  o.abs_tol = 1e-12 * G;
  o.rel_tol = 1e-12;
  o.max_panel_width = std::min(mean_zero_gap(t) / 8.0, G / (2.0 * b_a));
  const QuadResult r = integrate(
      [&](double x) {
        const double u = t + x;
        if (u == 0.0) return 0.0;
        return z_oracle(u).z_value * kernel_value(spec, x / G, k);
      },
      -R, R, o);
  if (!r.converged) throw NumericError("m_conv: adaptive quadrature did not converge");
  ConvValue v;
  v.value = pre * r.value;
  v.abs_error = std::abs(pre) * r.abs_error + std::pow(1.0 / G, k) * tail_bound(spec, t, y_r);
  v.radius = R;
  v.evaluations = r.evaluations;
  return v;
}

}  // namespace

double truncation_radius(const ConvolutionKernelSpec& spec, double t) {
  check_spec(spec);
  return spec.G * truncation_y(spec, t);
}

ConvValue m_conv_detail(double t, const ConvolutionKernelSpec& spec) {
  return conv_quadrature(t, spec, 0);
}

double m_conv(double t, const ConvolutionKernelSpec& spec) { return m_conv_detail(t, spec).value; }

ConvValue m_conv_derivative_detail(double t, const ConvolutionKernelSpec& spec, int k) {
  if (k == 0) return conv_quadrature(t, spec, 0);
  // Each f^{(k)} evaluation is a 2048-node sum, so use the lattice rule
  // rather than adaptive panels.
  const LatticeProfile lp = convolution_lattice(spec, t, 0.0, 1, k);
  ConvValue v;
  v.value = lp.m[0];
  v.abs_error = lp.quadrature_err;
  v.radius = lp.radius;
  v.evaluations = static_cast<long>(2.0 * lp.radius / lp.lattice_step) + 1;
  return v;
}

double m_conv_derivative(double t, const ConvolutionKernelSpec& spec, int k) {
  return m_conv_derivative_detail(t, spec, k).value;
}

LatticeProfile convolution_lattice(const ConvolutionKernelSpec& spec, double t_start,
                                   double spacing, int n, int k) {
  check_spec(spec);
  if (n < 1) throw UsageError("convolution_lattice: need at least one point");
  if (n > 1 && !(spacing > 0.0)) throw UsageError("convolution_lattice: spacing must be positive");
  if (k < 0 || k > 6) throw UsageError("convolution_lattice: k must be in [0, 6]");
  const double G = spec.G;
  const double b_a = spec.testfn->b_plateau() + spec.testfn->a_support();
  const double h_max = G / (3.0 * b_a);
  const double t_end = t_start + spacing * (n - 1);
  if (!(t_start >= 20.0)) throw UsageError("convolution_lattice: requires t >= 20");

  int per = 1;
  double h = h_max;
  if (n > 1) {
    per = static_cast<int>(std::ceil(spacing / h_max));
    h = spacing / per;
  }
  const double y_r = truncation_y(spec, t_end);
  const auto K = static_cast<long>(std::ceil(y_r * G / h));
  const double R = K * h;
  // Use an even K so the half-density rule lines up with the full one.
  const long Ke = K + (K % 2);

  std::vector<double> w(Ke + 1);
  const double pre = spec.amplitude * std::pow(-1.0 / G, k);
  parallel_for(w.size(), [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) w[i] = pre * kernel_value(spec, i * h / G, k);
  });

  const long n_nodes = static_cast<long>(n - 1) * per + 2 * Ke + 1;
  std::vector<double> z(n_nodes);
  parallel_for(z.size(), [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      const double u = t_start + (static_cast<long>(i) - Ke) * h;
      z[i] = u == 0.0 ? 0.0 : z_oracle(u).z_value;
    }
  });

  LatticeProfile p;
  p.lattice_step = h;
  p.radius = R;
  p.t.resize(n);
  p.m.resize(n);
  p.z.resize(n);
  double diff = 0.0;
  for (int j = 0; j < n; ++j) {
    const long c = static_cast<long>(j) * per + Ke;  // centre node
    CompensatedSum full;
    CompensatedSum half;
    full.add(w[0] * z[c]);
    half.add(2.0 * w[0] * z[c]);
    for (long i = 1; i <= Ke; ++i) {
      // f^{(k)} has the parity of k.
      const double pair = w[i] * (k % 2 == 0 ? z[c + i] + z[c - i] : z[c + i] - z[c - i]);
      full.add(pair);
      if (i % 2 == 0) half.add(2.0 * pair);
    }
    p.t[j] = t_start + j * spacing;
    p.m[j] = h * full.value();
    p.z[j] = z[c];
    diff = std::max(diff, std::abs(h * (full.value() - half.value())));
  }
  p.quadrature_err = diff + std::pow(1.0 / G, k) * tail_bound(spec, t_end, y_r);
  return p;
}

ConvolutionProfile theorem1_residual_study(double T, int n_points, const ConvolutionKernelSpec& spec_in,
                                           const Theorem1Options& opts) {
  check_spec(spec_in);
  if (!(T > 20.0 && T <= 5000.0)) throw UsageError("theorem1: requires 20 < T <= 5000");
  if (n_points < 2) throw UsageError("theorem1: need at least two grid points");
  const double limit = 2.0 * kPi * (spec_in.testfn->b_plateau() - spec_in.testfn->a_support());
  const bool ok = spec_in.delta < limit;
  if (!ok && opts.enforce_hypothesis)
    throw UsageError("theorem1: requires delta < 2 pi (b - a) = " + std::to_string(limit));
  const ConvolutionKernelSpec spec = respec(spec_in, T);

  ConvolutionProfile prof;
  prof.spec = spec;
  prof.within_hypothesis = ok;
  prof.window = std::pow(T, 0.25) * std::pow(std::log(T), 0.6);
  const double spacing = 2.0 * prof.window / (n_points - 1);
  const LatticeProfile lp = convolution_lattice(spec, T - prof.window, spacing, n_points);
  prof.quadrature_err = lp.quadrature_err;
  prof.grid.reserve(n_points);
  for (int j = 0; j < n_points; ++j) {
    ProfileRow r{};
    r.t = lp.t[j];
    r.m_value = lp.m[j];
    r.g_z_value = spec.G * lp.z[j];
    r.residual = r.m_value - r.g_z_value;
    prof.max_residual_over_g = std::max(prof.max_residual_over_g, std::abs(r.residual) / spec.G);
    prof.grid.push_back(r);
  }
  return prof;
}

Lemma1Result lemma1_lower_bound(double T, double V, const ConvolutionKernelSpec& spec_in,
                                double tolerance) {
  check_spec(spec_in);
  if (!(T > 20.0 && T <= 5000.0)) throw UsageError("lemma1: requires 20 < T <= 5000");
  Lemma1Result res;
  res.T = T;
  res.V = V;
  res.tolerance = tolerance;
  res.L = std::pow(std::log(T), 0.6);
  if (!(V >= res.L)) throw UsageError("lemma1: requires V >= L = (log T)^0.6");
  const ConvolutionKernelSpec spec = respec(spec_in, T);
  res.G = spec.G;
  if (!(spec.G < 1.0)) throw UsageError("lemma1: requires G < 1");
  if (V > std::cbrt(T)) {
    res.v_in_range = false;
    res.diagnostics.push_back("V exceeds T^{1/3}; the lower bound is outside its hypothesis");
  }

  const double half = V * res.L;
  const double b_a = spec.testfn->b_plateau() + spec.testfn->a_support();
  const double h = spec.G / (3.0 * b_a);
  const int n = static_cast<int>(std::ceil(2.0 * half / h)) + 1;
  const double step = 2.0 * half / (n - 1);
  const LatticeProfile lp = convolution_lattice(spec, T - half, step, n);
  res.quadrature_err = lp.quadrature_err;

  // Trapezoid on |M| w with the kink at each sign change handled exactly for
  // the piecewise-linear interpolant.
  CompensatedSum acc;
  auto weight = [&](double t) { return std::exp(-(T - t) * (T - t) / (V * V)); };
  for (int j = 0; j + 1 < n; ++j) {
    const double m0 = lp.m[j];
    const double m1 = lp.m[j + 1];
    const double w0 = weight(lp.t[j]);
    const double w1 = weight(lp.t[j + 1]);
    if ((m0 < 0.0) == (m1 < 0.0)) {
      acc.add(0.5 * step * (std::abs(m0) * w0 + std::abs(m1) * w1));
    } else {
      const double r = m0 / (m0 - m1);
      acc.add(0.5 * step * (std::abs(m0) * w0 * r + std::abs(m1) * w1 * (1.0 - r)));
    }
  }
  res.lhs = acc.value();
  const double x = spec.G / (2.0 * kPi) * std::log(std::sqrt(T / (2.0 * kPi)));
  res.rhs = spec.G * V * std::abs(spec.amplitude * spec.testfn->fourier(x));
  res.error_terms = std::pow(T, -0.25) + V * V * std::pow(T, -0.75) * res.L * res.L;
  res.holds = res.lhs >= (1.0 - tolerance) * res.rhs;
  return res;
}

// ---------------------------------------------------------------------------

DividedDifference divided_difference(const RealFn& F, std::span<const double> nodes, double x) {
  if (nodes.empty()) throw UsageError("divided_difference: need at least one node");
  std::vector<double> pts{x};
  pts.insert(pts.end(), nodes.begin(), nodes.end());
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (pts[i] == pts[j]) throw UsageError("divided_difference: points must be distinct");

  DividedDifference out;
  CompensatedSum acc;
  out.zeros_at_nodes = true;
  for (std::size_t p = 0; p < pts.size(); ++p) {
    const double fp = F(pts[p]);
    if (p == 0)
      out.f_at_x = fp;
    else if (fp != 0.0)
      out.zeros_at_nodes = false;
    double denom = 1.0;
    for (std::size_t q = 0; q < pts.size(); ++q)
      if (q != p) denom *= pts[p] - pts[q];
    acc.add(fp / denom);
  }
  out.value = acc.value();
  double prod = 1.0;
  for (double xj : nodes) prod *= x - xj;
  out.reconstruction = prod * out.value;
  return out;
}

DividedDifferenceTable::DividedDifferenceTable(const RealFn& F, std::vector<double> nodes)
    : nodes_(std::move(nodes)) {
  if (nodes_.empty()) throw UsageError("DividedDifferenceTable: need at least one node");
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    for (std::size_t j = i + 1; j < nodes_.size(); ++j)
      if (nodes_[i] == nodes_[j]) throw UsageError("DividedDifferenceTable: nodes must be distinct");
  values_.resize(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) values_[i] = F(nodes_[i]);
  table_.push_back(values_);
  for (std::size_t d = 1; d < nodes_.size(); ++d) {
    std::vector<double> row(nodes_.size() - d);
    for (std::size_t i = 0; i + d < nodes_.size(); ++i)
      row[i] = (table_[d - 1][i + 1] - table_[d - 1][i]) / (nodes_[i + d] - nodes_[i]);
    table_.push_back(std::move(row));
  }
}

double DividedDifferenceTable::entry(std::size_t i, std::size_t j) const {
  if (i > j || j >= nodes_.size()) throw UsageError("DividedDifferenceTable: bad index");
  return table_[j - i][i];
}

Bound75 bound_7_5_check(const RealFn& F, std::span<const double> zeros, double x,
                        double derivative_sup) {
  if (zeros.empty()) throw UsageError("bound_7_5_check: need at least one zero");
  for (double z : zeros)
    if (std::abs(F(z)) > 1e-10) throw UsageError("bound_7_5_check: node is not a zero of F");
  Bound75 b;
  b.lhs = std::abs(F(x));
  double prod = 1.0;
  double fact = 1.0;
  for (std::size_t i = 0; i < zeros.size(); ++i) {
    prod *= std::abs(x - zeros[i]);
    fact *= static_cast<double>(i + 1);
  }
  b.rhs = prod * derivative_sup / fact;
  b.holds = b.lhs <= b.rhs;
  return b;
}

double sampled_sup(const RealFn& g, double lo, double hi, int n) {
  if (n < 2) throw UsageError("sampled_sup: need at least two samples");
  double m = 0.0;
  for (int i = 0; i < n; ++i) m = std::max(m, std::abs(g(lo + (hi - lo) * i / (n - 1))));
  return m;
}

// ---------------------------------------------------------------------------

GapStats gap_stats(const std::vector<double>& zeros) {
  GapStats g;
  if (zeros.size() < 2) return g;
  g.count = static_cast<long>(zeros.size()) - 1;
  g.min = INFINITY;
  g.max = 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < zeros.size(); ++i) {
    const double d = zeros[i + 1] - zeros[i];
    sum += d;
    g.min = std::min(g.min, d);
    g.max = std::max(g.max, d);
  }
  g.mean = sum / g.count;
  return g;
}

namespace {

// Zero of the cubic through four samples, in the middle interval (bisection).
double cubic_root(const double* t, const double* v) {
  auto p = [&](double x) {
    double s = 0.0;
    for (int i = 0; i < 4; ++i) {
      double l = 1.0;
      for (int j = 0; j < 4; ++j)
        if (j != i) l *= (x - t[j]) / (t[i] - t[j]);
      s += v[i] * l;
    }
    return s;
  };
  double lo = t[1];
  double hi = t[2];
  double flo = v[1];
  for (int it = 0; it < 80 && hi - lo > 1e-14 * std::max(1.0, std::abs(lo)); ++it) {
    const double m = 0.5 * (lo + hi);
    const double fm = p(m);
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = m;
      flo = fm;
    } else {
      hi = m;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

CountComparison compare_counts(double T, double window, const ConvolutionKernelSpec& spec_in,
                               double A) {
  check_spec(spec_in);
  if (!(T <= 5000.0)) throw UsageError("compare_counts: requires T <= 5000");
  if (!(window >= 0.0 && window <= 50.0)) throw UsageError("compare_counts: window must be in [0, 50]");
  if (!(T - window >= 20.0)) throw UsageError("compare_counts: requires T - window >= 20");
  const ConvolutionKernelSpec spec = respec(spec_in, T);
  CountComparison c;
  c.T = T;
  c.window = window;
  const double l2 = std::log(std::log(T));
  const double l3 = std::log(l2);
  c.H = A * l3 / l2;
  c.expected_k = c.H / kPi * std::log(T / (2.0 * kPi));
  c.product.slack = std::log(T / (2.0 * kPi)) / kPi * l3 / l2;
  if (window == 0.0) return c;

  for (const auto& z : scan_zeros(T - window, T + window)) c.zeros_z.push_back(z.gamma);

  const double b_a = spec.testfn->b_plateau() + spec.testfn->a_support();
  const double h = spec.G / (3.0 * b_a);
  const int n = static_cast<int>(std::ceil(2.0 * window / h)) + 3;
  const double step = 2.0 * window / (n - 3);
  const LatticeProfile lp = convolution_lattice(spec, T - window - step, step, n);
  for (int j = 1; j + 2 < n; ++j) {
    if ((lp.m[j] < 0.0) != (lp.m[j + 1] < 0.0)) {
      const double r = cubic_root(&lp.t[j - 1], &lp.m[j - 1]);
      if (r >= T - window && r <= T + window) c.zeros_m.push_back(r);
    }
  }
  c.n_z = static_cast<long>(c.zeros_z.size());
  c.n_m = static_cast<long>(c.zeros_m.size());
  c.gaps_z = gap_stats(c.zeros_z);
  c.gaps_m = gap_stats(c.zeros_m);

  // Zero counts in [t - H, t + H] and the log-product bound over centres
  // spaced H apart inside the window.
  const double lead = std::log(T / (2.0 * kPi)) / kPi;
  const double bound = lead * (c.H * std::log(c.H) - c.H) + c.product.slack;
  double ksum = 0.0;
  c.product.max_excess = -INFINITY;
  for (double t = T - window + c.H; t <= T + window - c.H; t += c.H) {
    double lp_sum = 0.0;
    int k = 0;
    for (double g : c.zeros_m)
      if (std::abs(g - t) <= c.H) {
        lp_sum += std::log(std::abs(g - t));
        ++k;
      }
    ksum += k;
    c.product.centers++;
    if (lp_sum <= bound) c.product.satisfied++;
    c.product.max_excess = std::max(c.product.max_excess, lp_sum - bound);
  }
  if (c.product.centers > 0) c.mean_k = ksum / c.product.centers;
  return c;
}

}  // namespace hz

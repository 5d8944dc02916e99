#include "hardyz/davenport_heilbronn.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "hardyz/error.hpp"
#include "root_refine.hpp"

namespace hz {
namespace {

constexpr double kPi = std::numbers::pi;
const double kLog5 = std::log(5.0);

DHConstants make_constants() {
  const double r5 = std::sqrt(5.0);
  DHConstants c{};
  c.tan_theta = (std::sqrt(10.0 - 2.0 * r5) - 2.0) / (r5 - 1.0);
  c.theta_dh = std::atan(c.tan_theta);
  if (std::abs(std::tan(c.theta_dh) - c.tan_theta) > 1e-14)
    throw NumericError("dh_constants: tan(theta) round trip failed");
  return c;
}

struct Mix {
  std::array<double, 4> coeffs;
  std::array<double, 4> shifts{0.2, 0.4, 0.6, 0.8};
};

const Mix& mix() {
  static const Mix m = [] {
    const double tt = dh_constants().tan_theta;
    return Mix{{1.0, tt, -tt, -1.0}};
  }();
  return m;
}

// Relative scale below which |f| on a contour counts as "on a zero".
constexpr double kBoundaryZero = 1e-6;
constexpr double kMaxPiece = 0.05;

struct Cell {
  double s0, s1, t0, t1;
};

}  // namespace

const DHConstants& dh_constants() {
  static const DHConstants c = make_constants();
  return c;
}

cdouble dh_f(cdouble s) {
  const Mix& m = mix();
  return std::exp(-s * kLog5) * hurwitz_combination(s, m.coeffs, m.shifts);
}

ComplexDerivs dh_f_derivs(cdouble s) {
  const Mix& m = mix();
  const ComplexDerivs h = hurwitz_combination_derivs(s, m.coeffs, m.shifts);
  const cdouble p = std::exp(-s * kLog5);
  return {p * h.value, p * (h.d1 - kLog5 * h.value),
          p * (h.d2 - 2.0 * kLog5 * h.d1 + kLog5 * kLog5 * h.value)};
}

cdouble dh_log_X(cdouble s) {
  return std::log(2.0) + log_gamma(1.0 - s) + log_cos(kPi * s / 2.0) - (s - 0.5) * kLog5 -
         (1.0 - s) * std::log(2.0 * kPi);
}

cdouble dh_X(cdouble s) { return std::exp(dh_log_X(s)); }

double dh_functional_residual(cdouble s) {
  const cdouble fs = dh_f(s);
  const cdouble rhs = dh_X(s) * dh_f(1.0 - s);
  return std::abs(fs - rhs) / std::max(std::abs(fs), 1e-300);
}

double dh_z(double t) {
  if (std::abs(t) < 2.0) throw UsageError("dh_z: requires |t| >= 2");
  const cdouble s(0.5, t);
  const cdouble f = dh_f(s);
  const cdouble z = std::exp(-0.5 * dh_log_X(s)) * f;
  if (std::abs(z.imag()) > 1e-9 * std::max(1.0, std::abs(f)))
    throw NumericError("dh_z: rotated value not real (|Im| = " + std::to_string(z.imag()) + ")");
  return z.real();
}

namespace {

// Accumulated change of arg f along the segment a -> b.
double arg_change(cdouble a, cdouble b, cdouble fa, cdouble fb, double scale, int depth) {
  const double d = std::arg(fb / fa);
  if (depth > 50) throw NumericError("dh_winding: contour resolution limit reached");
  const cdouble m = 0.5 * (a + b);
  const cdouble fm = dh_f(m);
  if (std::abs(fm) < kBoundaryZero * scale)
    throw NumericError("dh_winding: f nearly vanishes on the contour");
  const double d1 = std::arg(fm / fa);
  const double d2 = std::arg(fb / fm);
  if (std::abs(d) < kPi / 4.0 && std::abs(d1 + d2 - d) < 1e-3) return d;
  return arg_change(a, m, fa, fm, scale, depth + 1) + arg_change(m, b, fm, fb, scale, depth + 1);
}

double boundary_scale(const Cell& c) {
  // Typical size of f near the cell: |f| at the corners, floored at 1.
  double s = 1.0;
  for (cdouble z : {cdouble(c.s0, c.t0), cdouble(c.s1, c.t1)}) s = std::max(s, std::abs(dh_f(z)));
  return s;
}

double winding_raw(const Cell& c) {
  const std::array<cdouble, 4> corners = {cdouble(c.s0, c.t0), cdouble(c.s1, c.t0),
                                          cdouble(c.s1, c.t1), cdouble(c.s0, c.t1)};
  std::array<cdouble, 4> fv{};
  const double scale = boundary_scale(c);
  for (int i = 0; i < 4; ++i) {
    fv[i] = dh_f(corners[i]);
    if (std::abs(fv[i]) < kBoundaryZero * scale)
      throw NumericError("dh_winding: f nearly vanishes on the contour");
  }
  double total = 0.0;
  for (int side = 0; side < 4; ++side) {
    const cdouble a = corners[side];
    const cdouble b = corners[(side + 1) % 4];
    // Start well below the oscillation scale of f; arg_change refines further.
    const int kPieces = std::max(4, static_cast<int>(std::ceil(std::abs(b - a) / kMaxPiece)));
    cdouble pa = a;
    cdouble fa = fv[side];
    for (int k = 1; k <= kPieces; ++k) {
      const cdouble pb = k == kPieces ? b : a + (b - a) * (static_cast<double>(k) / kPieces);
      const cdouble fb = k == kPieces ? fv[(side + 1) % 4] : dh_f(pb);
      if (std::abs(fb) < kBoundaryZero * scale)
        throw NumericError("dh_winding: f nearly vanishes on the contour");
      total += arg_change(pa, pb, fa, fb, scale, 0);
      pa = pb;
      fa = fb;
    }
  }
  return total / (2.0 * kPi);
}

int to_count(double w) {
  const double r = std::round(w);
  if (std::abs(w - r) > 1e-3) throw NumericError("dh_winding: non-integer winding number");
  return static_cast<int>(r);
}

bool newton(cdouble& s, const Cell& c, double residual_target) {
  const double margin = 1e-9;
  for (int it = 0; it < 60; ++it) {
    const ComplexDerivs d = dh_f_derivs(s);
    const cdouble step = d.value / d.d1;
    s -= step;
    if (s.real() < c.s0 - margin || s.real() > c.s1 + margin || s.imag() < c.t0 - margin ||
        s.imag() > c.t1 + margin)
      return false;
    if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(s))) break;
  }
  return std::abs(dh_f(s)) <= residual_target;
}

struct Search {
  const DHSearchOptions& opts;
  DHSearch& out;

  // Winding of a cell, nudging its edges off a boundary zero if needed.
  bool cell_winding(Cell& c, int& w) {
    for (int attempt = 0; attempt < 6; ++attempt) {
      try {
        w = to_count(winding_raw(c));
        return true;
      } catch (const NumericError& e) {
        const double js = 1e-4 * (c.s1 - c.s0) * (attempt + 1);
        const double jt = 1e-4 * (c.t1 - c.t0) * (attempt + 1);
        out.diagnostics.push_back(std::string("cell boundary jittered: ") + e.what());
        c.s0 += js;
        c.s1 -= js;
        c.t0 += jt;
        c.t1 -= jt;
      }
    }
    return false;
  }

  void split(const Cell& c, int w, int depth, double frac) {
    Cell a = c;
    Cell b = c;
    if (c.s1 - c.s0 > c.t1 - c.t0) {
      const double m = c.s0 + frac * (c.s1 - c.s0);
      a.s1 = m;
      b.s0 = m;
    } else {
      const double m = c.t0 + frac * (c.t1 - c.t0);
      a.t1 = m;
      b.t0 = m;
    }
    int wa = 0;
    int wb = 0;
    // Children share an edge, so no jitter here: a zero on the split line
    // shows up as a failure and the split point moves instead.
    try {
      wa = to_count(winding_raw(a));
      wb = to_count(winding_raw(b));
    } catch (const NumericError&) {
      wa = wb = -1;
    }
    if (wa < 0 || wb < 0 || wa + wb != w) {
      if (frac > 0.9) {
        out.diagnostics.push_back("subdivision could not separate zeros near " +
                                  std::to_string(c.s0) + "+" + std::to_string(c.t0) + "i");
        return;
      }
      out.diagnostics.push_back("child windings inconsistent; moving split point");
      split(c, w, depth, frac + 0.0617);
      return;
    }
    process(a, wa, depth + 1);
    process(b, wb, depth + 1);
  }

  void process(const Cell& c, int w, int depth) {
    out.cells++;
    if (w <= 0) return;
    if (w == 1) {
      cdouble s(0.5 * (c.s0 + c.s1), 0.5 * (c.t0 + c.t1));
      if (newton(s, c, opts.newton_residual)) {
        StripZero z;
        z.position = s;
        z.residual = std::abs(dh_f(s));
        z.on_line = std::abs(s.real() - 0.5) < 1e-9;
        out.zeros.push_back(z);
        return;
      }
    }
    if (depth >= opts.max_depth) {
      out.diagnostics.push_back("maximum subdivision depth reached with " + std::to_string(w) +
                                " zero(s) unresolved");
      return;
    }
    split(c, w, depth, 0.5 + 0.0731);
  }
};

}  // namespace

int dh_winding(double sigma_lo, double sigma_hi, double t_lo, double t_hi) {
  if (!(sigma_lo < sigma_hi && t_lo < t_hi)) throw UsageError("dh_winding: empty rectangle");
  return to_count(winding_raw(Cell{sigma_lo, sigma_hi, t_lo, t_hi}));
}

DHSearch dh_zero_search_detail(double sigma_lo, double sigma_hi, double t_lo, double t_hi,
                               const DHSearchOptions& opts) {
  if (!(sigma_lo > 0.0 && sigma_hi < 1.0 && sigma_lo <= sigma_hi))
    throw UsageError("dh_zero_search: rectangle must satisfy 0 < sigma_lo <= sigma_hi < 1");
  if (t_lo > t_hi || std::abs(t_lo) > 500.0 || std::abs(t_hi) > 500.0)
    throw UsageError("dh_zero_search: requires t_lo <= t_hi and |t| <= 500");
  DHSearch out;
  if (sigma_lo == sigma_hi || t_lo == t_hi) return out;
  Search search{opts, out};
  Cell root{sigma_lo, sigma_hi, t_lo, t_hi};
  int w = 0;
  if (!search.cell_winding(root, w))
    throw NumericError("dh_zero_search: contour passes through zeros; move the rectangle");
  out.winding = w;
  search.process(root, w, 0);
  std::sort(out.zeros.begin(), out.zeros.end(), [](const StripZero& a, const StripZero& b) {
    return a.position.imag() < b.position.imag();
  });
  if (static_cast<int>(out.zeros.size()) != w)
    out.diagnostics.push_back("refined " + std::to_string(out.zeros.size()) +
                              " zeros but the winding number is " + std::to_string(w));
  return out;
}

std::vector<StripZero> dh_zero_search(double sigma_lo, double sigma_hi, double t_lo,
                                      double t_hi) {
  return dh_zero_search_detail(sigma_lo, sigma_hi, t_lo, t_hi).zeros;
}

std::vector<StripZero> dh_line_scan(double t_lo, double t_hi) {
  if (!(t_lo >= 10.0 && t_lo < t_hi && t_hi <= 500.0))
    throw UsageError("dh_line_scan: requires 10 <= t_lo < t_hi <= 500");
  std::vector<double> grid{t_lo};
  for (double t = t_lo; t < t_hi;) {
    const double gap = 2.0 * kPi / std::log(5.0 * t / (2.0 * kPi));
    t = std::min(t + std::min(0.5, 0.2 * gap), t_hi);
    grid.push_back(t);
  }
  std::vector<double> v(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) v[i] = dh_z(grid[i]);

  std::vector<std::pair<double, double>> brackets;
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if ((v[i] < 0.0) != (v[i + 1] < 0.0)) brackets.emplace_back(grid[i], grid[i + 1]);
  for (std::size_t k = 1; k + 1 < v.size(); ++k) {
    const bool same = (v[k - 1] < 0.0) == (v[k] < 0.0) && (v[k] < 0.0) == (v[k + 1] < 0.0);
    if (!same || std::abs(v[k]) >= std::abs(v[k - 1]) || std::abs(v[k]) >= std::abs(v[k + 1]))
      continue;
    constexpr int kSub = 16;
    double pt = grid[k - 1];
    double pv = v[k - 1];
    for (int j = 1; j <= kSub; ++j) {
      const double t = grid[k - 1] + (grid[k + 1] - grid[k - 1]) * j / kSub;
      const double z = dh_z(t);
      if ((z < 0.0) != (pv < 0.0)) brackets.emplace_back(pt, t);
      pt = t;
      pv = z;
    }
  }
  std::sort(brackets.begin(), brackets.end());

  std::vector<StripZero> out;
  for (const auto& [lo, hi] : brackets) {
    const detail::Bracket b = detail::refine_sign_change(dh_z, lo, hi, dh_z(lo), dh_z(hi), 1e-10);
    StripZero z;
    z.position = cdouble(0.5, b.root);
    z.residual = std::abs(dh_f(z.position));
    z.on_line = true;
    if (!out.empty() && std::abs(out.back().position.imag() - b.root) < 1e-7) continue;
    out.push_back(z);
  }
  return out;
}

}  // namespace hz

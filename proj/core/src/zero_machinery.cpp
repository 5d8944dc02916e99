#include "hardyz/zero_machinery.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hardyz/error.hpp"
#include "hardyz/parallel.hpp"
#include "root_refine.hpp"

namespace hz {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double zo(double t) { return z_oracle(t).z_value; }

std::vector<double> adaptive_grid(double t_lo, double t_hi, const ScanOptions& opts) {
  std::vector<double> grid{t_lo};
  double t = t_lo;
  while (t < t_hi) {
    const double h = opts.fixed_step > 0.0 ? opts.fixed_step
                                           : std::min(0.5, opts.step_factor * mean_zero_gap(t));
    t = std::min(t + h, t_hi);
    grid.push_back(t);
  }
  return grid;
}

std::vector<double> sample(const std::vector<double>& grid, double (*fn)(double)) {
  std::vector<double> v(grid.size());
  parallel_for(grid.size(), [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) v[i] = fn(grid[i]);
  });
  return v;
}

double scan_value(double t) { return z_scan_sample(t).z_value; }

// Sign changes in a sampled grid, as (index of left sample).
std::vector<std::size_t> sign_changes(const std::vector<double>& v) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if ((v[i] < 0.0) != (v[i + 1] < 0.0) && v[i] != 0.0) out.push_back(i);
  return out;
}

std::vector<ZeroRecord> refine_all(const std::vector<std::pair<double, double>>& brackets) {
  std::vector<ZeroRecord> out(brackets.size());
  parallel_for(brackets.size(), [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      const auto [lo, hi] = brackets[i];
      out[i] = refine_zero(lo, hi, zo(lo), zo(hi));
    }
  });
  return out;
}

}  // namespace

const char* to_string(ZeroMethod m) {
  return m == ZeroMethod::sign_change ? "sign_change" : "extremum_touch";
}

const char* to_string(LehmerKind k) {
  switch (k) {
    case LehmerKind::neg_local_max: return "neg_local_max";
    case LehmerKind::pos_local_min: return "pos_local_min";
    case LehmerKind::close_pair: return "close_pair";
  }
  return "?";
}

CriticalLineSample z_scan_sample(double t) {
  if (std::abs(t) < 50.0) return z_oracle(t);
  const CriticalLineSample rs = z_rs(std::abs(t));
  if (std::abs(rs.z_value) < 4.0 * rs.err_bound) return z_oracle(t);
  return rs;
}

double mean_zero_gap(double t) { return kTwoPi / std::log(std::max(t, 20.0) / kTwoPi); }

ZeroRecord refine_zero(double lo, double hi, double z_lo, double z_hi, double bracket_width) {
  const detail::Bracket b = detail::refine_sign_change(zo, lo, hi, z_lo, z_hi, bracket_width);
  ZeroRecord r;
  r.gamma = b.root;
  r.residual = std::abs(b.value);
  r.bracket_lo = b.lo;
  r.bracket_hi = b.hi;
  r.method = ZeroMethod::sign_change;
  return r;
}

ZeroScan scan_zeros_detail(double t_lo, double t_hi, const ScanOptions& opts) {
  if (!(t_lo >= 10.0)) throw UsageError("scan_zeros: requires t_lo >= 10");
  if (t_hi < t_lo) throw UsageError("scan_zeros: requires t_lo <= t_hi");
  ZeroScan out;
  if (t_hi == t_lo) return out;
  if (opts.fixed_step > 0.0 && opts.fixed_step > 0.5 * mean_zero_gap(t_hi)) {
    out.warnings.push_back("step " + std::to_string(opts.fixed_step) +
                           " exceeds half the mean zero gap at t_hi; zero pairs may be missed");
  }
  const std::vector<double> grid = adaptive_grid(t_lo, t_hi, opts);
  const std::vector<double> v = sample(grid, scan_value);
  out.samples = static_cast<long>(grid.size());

  std::vector<std::pair<double, double>> brackets;
  for (std::size_t i : sign_changes(v)) brackets.emplace_back(grid[i], grid[i + 1]);

  // Sign-preserving dips of |Z| can hide a close pair between samples; look
  // inside with the oracle.
  for (std::size_t k = 1; k + 1 < v.size(); ++k) {
    const bool same = (v[k - 1] < 0.0) == (v[k] < 0.0) && (v[k] < 0.0) == (v[k + 1] < 0.0);
    if (!same || std::abs(v[k]) >= std::abs(v[k - 1]) || std::abs(v[k]) >= std::abs(v[k + 1]))
      continue;
    constexpr int kSub = 16;
    const double a = grid[k - 1];
    const double b = grid[k + 1];
    double prev_t = a;
    double prev_v = zo(a);
    for (int j = 1; j <= kSub; ++j) {
      const double t = a + (b - a) * j / kSub;
      const double z = zo(t);
      out.samples++;
      if ((z < 0.0) != (prev_v < 0.0)) brackets.emplace_back(prev_t, t);
      prev_t = t;
      prev_v = z;
    }
  }
  std::sort(brackets.begin(), brackets.end());
  out.zeros = refine_all(brackets);
  std::sort(out.zeros.begin(), out.zeros.end(),
            [](const ZeroRecord& x, const ZeroRecord& y) { return x.gamma < y.gamma; });
  // Drop duplicates from overlapping sub-scans.
  out.zeros.erase(std::unique(out.zeros.begin(), out.zeros.end(),
                              [](const ZeroRecord& x, const ZeroRecord& y) {
                                return std::abs(x.gamma - y.gamma) < 1e-7;
                              }),
                  out.zeros.end());
  for (const auto& z : out.zeros) {
    if (z.residual > 1e-8)
      out.warnings.push_back("zero near " + std::to_string(z.gamma) + " has residual " +
                             std::to_string(z.residual));
  }
  const double expected = riemann_von_mangoldt_main(t_hi) - riemann_von_mangoldt_main(t_lo);
  if (std::abs(static_cast<double>(out.zeros.size()) - expected) > 3.0 + 0.5 * std::log(t_hi)) {
    out.warnings.push_back("found " + std::to_string(out.zeros.size()) + " zeros, smooth count " +
                           std::to_string(expected) + "; the grid may be too coarse");
  }
  return out;
}

std::vector<ZeroRecord> scan_zeros(double t_lo, double t_hi, const ScanOptions& opts) {
  return scan_zeros_detail(t_lo, t_hi, opts).zeros;
}

double riemann_von_mangoldt_main(double T) {
  const double x = T / kTwoPi;
  return x * std::log(x) - x + 0.875;
}

CountSummary count_and_s(double T) {
  if (!(T >= 10.0)) throw UsageError("count_and_s: requires T >= 10");
  if (std::abs(zo(T)) < 1e-10) throw UsageError("count_and_s: T lies on a zero; reposition T");
  const ZeroScan scan = scan_zeros_detail(10.0, T);
  CountSummary c;
  c.T = T;
  c.n_found = static_cast<long>(scan.zeros.size());
  c.main_term = riemann_von_mangoldt_main(T);
  c.s_estimate = static_cast<double>(c.n_found) - c.main_term;
  c.warnings = scan.warnings;
  return c;
}

LehmerScan lehmer_scan_detail(double t_lo, double t_hi, const LehmerOptions& opts) {
  if (!(t_lo > 0.0)) throw UsageError("lehmer_scan: requires t_lo > 0");
  if (t_hi < t_lo) throw UsageError("lehmer_scan: requires t_lo <= t_hi");
  if (!(opts.step > 0.0)) throw UsageError("lehmer_scan: step must be positive");
  LehmerScan out;
  if (t_hi == t_lo) return out;

  const auto n = static_cast<std::size_t>(std::ceil((t_hi - t_lo) / opts.step)) + 1;
  std::vector<double> grid(n);
  for (std::size_t i = 0; i < n; ++i) grid[i] = std::min(t_lo + opts.step * i, t_hi);
  const std::vector<double> v = sample(grid, zo);
  out.samples = static_cast<long>(n);

  // Zeros.
  std::vector<std::pair<double, double>> brackets;
  for (std::size_t i : sign_changes(v)) brackets.emplace_back(grid[i], grid[i + 1]);
  out.zeros = refine_all(brackets);

  // Extrema: sign change of the least-squares slope over 5-point stencils.
  const double h = opts.step;
  auto slope = [&](std::size_t k) {
    return (-2.0 * v[k - 2] - v[k - 1] + v[k + 1] + 2.0 * v[k + 2]) / (10.0 * h);
  };
  std::vector<std::pair<double, double>> ext_brackets;
  for (std::size_t k = 2; k + 3 < n; ++k) {
    const double d0 = slope(k);
    const double d1 = slope(k + 1);
    if ((d0 < 0.0) != (d1 < 0.0)) ext_brackets.emplace_back(grid[k], grid[k + 1]);
  }
  out.extrema_examined = static_cast<long>(ext_brackets.size());

  std::vector<std::optional<LehmerEvent>> found(ext_brackets.size());
  parallel_for(ext_brackets.size(), [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      // Locate the critical point by bisection on Z' (jets), widening the
      // bracket by one step each side since the stencil slope lags.
      double lo = std::max(t_lo, ext_brackets[i].first - h);
      double hi = std::min(t_hi, ext_brackets[i].second + h);
      double dlo = z_jet(lo).d1;
      double dhi = z_jet(hi).d1;
      if ((dlo < 0.0) == (dhi < 0.0)) continue;
      for (int it = 0; it < 60 && hi - lo > 1e-12; ++it) {
        const double m = 0.5 * (lo + hi);
        const double dm = z_jet(m).d1;
        if ((dm < 0.0) == (dlo < 0.0)) {
          lo = m;
          dlo = dm;
        } else {
          hi = m;
        }
      }
      const double te = 0.5 * (lo + hi);
      const ZJet j = z_jet(te);
      LehmerEvent ev;
      ev.t_ext = te;
      ev.z_ext = j.z;
      ev.closeness = std::abs(j.z);
      if (j.z < 0.0 && j.d2 < 0.0) {
        ev.kind = LehmerKind::neg_local_max;
        found[i] = ev;
      } else if (j.z > 0.0 && j.d2 > 0.0) {
        ev.kind = LehmerKind::pos_local_min;
        found[i] = ev;
      }
    }
  });
  for (auto& f : found)
    if (f) out.events.push_back(*f);

  for (std::size_t i = 0; i + 1 < out.zeros.size(); ++i) {
    const double g0 = out.zeros[i].gamma;
    const double g1 = out.zeros[i + 1].gamma;
    const double mid = 0.5 * (g0 + g1);
    const double zm = zo(mid);
    if (std::abs(zm) < opts.threshold) {
      LehmerEvent ev;
      ev.t_ext = mid;
      ev.z_ext = zm;
      ev.kind = LehmerKind::close_pair;
      ev.gap_pair = std::make_pair(g0, g1);
      ev.closeness = std::abs(zm);
      out.events.push_back(ev);
    }
  }
  std::sort(out.events.begin(), out.events.end(),
            [](const LehmerEvent& a, const LehmerEvent& b) { return a.t_ext < b.t_ext; });
  // Adjacent stencil brackets can land on the same extremum.
  out.events.erase(std::unique(out.events.begin(), out.events.end(),
                               [](const LehmerEvent& a, const LehmerEvent& b) {
                                 return a.kind == b.kind && std::abs(a.t_ext - b.t_ext) < 1e-6;
                               }),
                   out.events.end());
  return out;
}

std::vector<LehmerEvent> lehmer_scan(double t_lo, double t_hi, double threshold) {
  LehmerOptions o;
  o.threshold = threshold;
  return lehmer_scan_detail(t_lo, t_hi, o).events;
}

Prop1Report prop1_check(double t_lo, double t_hi, double step, double tolerance) {
  if (!(t_lo > 0.0) || t_hi <= t_lo) throw UsageError("prop1_check: requires 0 < t_lo < t_hi");
  if (!(step > 0.0)) throw UsageError("prop1_check: step must be positive");
  if (std::abs(zo(t_lo)) < 1e-10 || std::abs(zo(t_hi)) < 1e-10)
    throw UsageError("prop1_check: range endpoints must not be zeros of Z");
  Prop1Report rep;
  rep.t_lo = t_lo;
  rep.t_hi = t_hi;
  rep.tolerance = tolerance;

  // Zeros in range from a grid at the requested step.
  const auto n = static_cast<std::size_t>(std::ceil((t_hi - t_lo) / step)) + 1;
  std::vector<double> grid(n);
  for (std::size_t i = 0; i < n; ++i) grid[i] = std::min(t_lo + step * i, t_hi);
  std::vector<ZJet> jets(n);
  parallel_for(n, [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) jets[i] = z_jet(grid[i]);
  });
  std::vector<double> zv(n);
  for (std::size_t i = 0; i < n; ++i) zv[i] = jets[i].z;
  std::vector<std::pair<double, double>> brackets;
  for (std::size_t i : sign_changes(zv)) brackets.emplace_back(grid[i], grid[i + 1]);
  for (const auto& z : refine_all(brackets)) rep.zeros.push_back(z.gamma);

  rep.intervals = static_cast<int>(rep.zeros.size()) + 1;
  rep.max_value = -INFINITY;
  for (std::size_t i = 0; i < n; ++i) {
    const ZJet& j = jets[i];
    if (std::abs(j.z) < 1e-6) {
      rep.skipped_near_zero++;
      continue;
    }
    const double q = (j.z * j.d2 - j.d1 * j.d1) / (j.z * j.z);
    rep.samples++;
    rep.max_value = std::max(rep.max_value, q);
    if (q >= tolerance) rep.violations.push_back({grid[i], q});
  }
  if (rep.skipped_near_zero > 0)
    rep.diagnostics.push_back(std::to_string(rep.skipped_near_zero) +
                              " samples within 1e-6 of a zero excluded (derivative ratio "
                              "not resolvable there)");
  return rep;
}

}  // namespace hz

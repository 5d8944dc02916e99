#include "hardyz/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "hardyz/compensated_sum.hpp"
#include "hardyz/error.hpp"

namespace hz {
namespace {

// Kronrod nodes on [0, 1] (symmetric), with the 7-point Gauss subset at odd indices.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

}  // namespace

std::pair<double, double> gauss_kronrod_15(const std::function<double(double)>& f, double a,
                                           double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double resk = fc * kWgk[7];
  double resg = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    resk += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
  }
  return {resk * half, std::abs((resk - resg) * half)};
}

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadOptions& opts) {
  std::vector<double> breaks{a, b};
  if (opts.max_panel_width > 0.0 && b > a) {
    const auto n = static_cast<long>(std::ceil((b - a) / opts.max_panel_width));
    breaks.clear();
    for (long i = 0; i <= n; ++i) breaks.push_back(a + (b - a) * static_cast<double>(i) / n);
  }
  return integrate(f, breaks, opts);
}

QuadResult integrate(const std::function<double(double)>& f, const std::vector<double>& breaks,
                     const QuadOptions& opts) {
  QuadResult out;
  if (breaks.size() < 2) throw UsageError("integrate: need at least two breakpoints");
  if (breaks.front() == breaks.back()) {
    out.converged = true;
    return out;
  }
  std::priority_queue<Panel> heap;
  double total_err = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    auto [v, e] = gauss_kronrod_15(f, breaks[i], breaks[i + 1]);
    heap.push({breaks[i], breaks[i + 1], v, e});
    total_err += e;
    out.evaluations += 15;
  }
  auto current_value = [&] {
    CompensatedSum s;
    auto copy = heap;
    while (!copy.empty()) {
      s.add(copy.top().value);
      copy.pop();
    }
    return s.value();
  };
  double value = current_value();
  while (total_err > std::max(opts.abs_tol, opts.rel_tol * std::abs(value))) {
    if (static_cast<int>(heap.size()) >= opts.max_panels) break;
    Panel worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) break;  // cannot split further
    heap.pop();
    auto [v1, e1] = gauss_kronrod_15(f, worst.a, mid);
    auto [v2, e2] = gauss_kronrod_15(f, mid, worst.b);
    out.evaluations += 30;
    heap.push({worst.a, mid, v1, e1});
    heap.push({mid, worst.b, v2, e2});
    total_err += e1 + e2 - worst.error;
    value += v1 + v2 - worst.value;
  }
  out.panels = static_cast<int>(heap.size());
  out.value = current_value();
  // Recompute the error sum exactly; the running total drifts.
  double err = 0.0;
  for (auto copy = heap; !copy.empty(); copy.pop()) err += copy.top().error;
  out.abs_error = err;
  out.converged = err <= std::max(opts.abs_tol, opts.rel_tol * std::abs(out.value));
  return out;
}

}  // namespace hz

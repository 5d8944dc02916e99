#include "hardyz/gelfand_shilov.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>

#include "hardyz/compensated_sum.hpp"
#include "hardyz/error.hpp"
#include "hardyz/quadrature.hpp"

namespace hz {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kBumpHalfNodes = 1024;
constexpr int kPlateauHalfNodes = 2048;

double raw_bump(double r) {
  const double d = 1.0 - r * r;
  if (d <= 0.0) return 0.0;
  return std::exp(-1.0 / d);
}

QuadOptions tight() {
  QuadOptions o;
  o.abs_tol = 1e-17;
  o.rel_tol = 1e-15;
  return o;
}

}  // namespace

// ---------------------------------------------------------------------------

Bump::Bump(double a_support) : a_(a_support) {
  if (!(a_support > 0.0)) throw UsageError("make_bump: support radius must be positive");
  const QuadResult r = integrate([](double u) { return raw_bump(u); }, {-1.0, 0.0, 1.0}, tight());
  norm_ = 1.0 / (a_ * r.value);
  h_ = a_ / kBumpHalfNodes;
  nodes_.resize(kBumpHalfNodes + 1);
  for (int j = 0; j <= kBumpHalfNodes; ++j) nodes_[j] = (*this)(j * h_);
}

double Bump::operator()(double x) const { return norm_ * raw_bump(x / a_); }

double Bump::cumulative(double y) const {
  if (y <= -a_) return 0.0;
  if (y >= a_) return 1.0;
  auto phi = [this](double u) { return (*this)(u); };
  if (y <= 0.0) return integrate(phi, -a_, y, tight()).value;
  return 1.0 - integrate(phi, y, a_, tight()).value;
}

double Bump::transform(double x) const {
  if (std::abs(x) * a_ > 400.0) return 0.0;
  CompensatedSum s;
  const double w = 2.0 * kPi * x * h_;
  for (int j = kBumpHalfNodes - 1; j >= 1; --j) s.add(nodes_[j] * std::cos(w * j));
  return h_ * (nodes_[0] + 2.0 * s.value());
}

Bump make_bump(double a_support) { return Bump(a_support); }

// ---------------------------------------------------------------------------

Plateau::Plateau(Bump phi, double b) : phi_(std::move(phi)), b_(b) {
  if (!(b > std::max(1.0, phi_.support())))
    throw UsageError("make_plateau: requires b > max(1, a)");
}

double Plateau::operator()(double x) const {
  // Phi(x) = C(x + b) - C(x - b) = C(b - |x|) since C(x + b) = 1 for x >= 0.
  const double ax = std::abs(x);
  const double a = phi_.support();
  if (ax <= b_ - a) return 1.0;
  if (ax >= b_ + a) return 0.0;
  return phi_.cumulative(b_ - ax);
}

Plateau make_plateau(const Bump& phi, double b) { return Plateau(phi, b); }

// ---------------------------------------------------------------------------

struct TestFunction::Samples {
  std::once_flag once;
  double step = 0.0;
  std::vector<double> f;  // f(j step), j = 0..n
};

TestFunction::TestFunction(Plateau plateau, bool positive_class)
    : plateau_(std::move(plateau)),
      positive_class_(positive_class),
      samples_(std::make_shared<Samples>()) {
  const double a = plateau_.a();
  const double b = plateau_.b();
  const double top = b + a;
  hu_ = top / kPlateauHalfNodes;

  // Phi at the derivative-route nodes by cumulative integration of phi.
  phi_nodes_.assign(kPlateauHalfNodes + 1, 0.0);
  const Bump& phi = plateau_.bump();
  auto phif = [&phi](double u) { return phi(u); };
  // Walking u downward from b + a, y = b - u rises from -a and
  // Phi(u) = C(y) = int_{-a}^{y} phi accumulates panel by panel.
  CompensatedSum acc;
  double prev_y = -a;
  for (int j = kPlateauHalfNodes; j >= 0; --j) {
    const double u = j * hu_;
    if (u >= top) {
      phi_nodes_[j] = 0.0;
      continue;
    }
    if (u <= b - a) {
      phi_nodes_[j] = 1.0;
      continue;
    }
    const double y = b - u;
    acc.add(gauss_kronrod_15(phif, prev_y, y).first);
    prev_y = y;
    phi_nodes_[j] = acc.value();
  }

  if (positive_class_ && !(plateau_(0.0) > 0.0))
    throw UsageError("TestFunction: positive class requires int f > 0");

  // Decay envelope: regress log of local maxima of the majorant
  // |phi-hat(x)|/(pi x) against sqrt(x).
  decay_.alpha = 2.0;
  std::vector<double> xs;
  std::vector<double> ys;
  const double dx = 0.02;
  double g_prev2 = 0.0;
  double g_prev = 0.0;
  for (int i = 1; i <= 6000; ++i) {
    const double x = 1.0 + i * dx;
    const double g = std::abs(phi.transform(x)) / (kPi * x);
    if (i >= 3 && g_prev > g_prev2 && g_prev > g && g_prev > 1e-250) {
      xs.push_back(std::sqrt(x - dx));
      ys.push_back(std::log(g_prev));
    }
    g_prev2 = g_prev;
    g_prev = g;
  }
  double slope = 0.0;
  if (xs.size() >= 2) {
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      mx += xs[i];
      my += ys[i];
    }
    mx /= xs.size();
    my /= xs.size();
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sxy += (xs[i] - mx) * (ys[i] - my);
      sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    slope = sxy / sxx;
  }
  decay_.a = std::max(0.0, -0.95 * slope);
  double C = 0.0;
  for (int i = 0; i <= 6000; ++i) {
    const double x = i * dx * (1.0 + 1.0 / 60.0);  // cover [0, 122]
    C = std::max(C, std::abs((*this)(x)) * std::exp(decay_.a * std::sqrt(x)));
  }
  decay_.C = C;
  decay_.x_max = decay_.a > 0.0 ? std::pow(std::log(C / 1e-14) / decay_.a, 2.0) : INFINITY;
}

double TestFunction::operator()(double x) const {
  const double b = plateau_.b();
  const double ph = plateau_.bump().transform(x);
  if (x == 0.0) return 2.0 * b * ph;
  return std::sin(2.0 * kPi * b * x) / (kPi * x) * ph;
}

double TestFunction::derivative(double x, int q) const {
  if (q < 0 || q > 12) throw UsageError("TestFunction::derivative: q must be in [0, 12]");
  // Even Phi: the integrand (2 pi u)^q cos(2 pi x u + q pi/2) is even in u, so
  // integrate over [0, b + a] and double.
  CompensatedSum s;
  const double shift = q * kPi / 2.0;
  for (int j = kPlateauHalfNodes; j >= 0; --j) {
    const double p = phi_nodes_[j];
    if (p == 0.0) continue;
    const double u = j * hu_;
    const double w = (j == 0) ? 0.5 : 1.0;
    s.add(w * p * std::pow(2.0 * kPi * u, q) * std::cos(2.0 * kPi * x * u + shift));
  }
  return 2.0 * hu_ * s.value();
}

double TestFunction::eval_quadrature(double x) const {
  const double a = plateau_.a();
  const double b = plateau_.b();
  const double w = 2.0 * kPi * x;
  // Plateau part exactly; transition band numerically.
  const double flat = (x == 0.0) ? (b - a) : std::sin(w * (b - a)) / w;
  QuadOptions o;
  o.abs_tol = 1e-14;
  o.rel_tol = 1e-13;
  o.max_panel_width = 0.05;
  const QuadResult r =
      integrate([&](double u) { return plateau_(u) * std::cos(w * u); }, b - a, b + a, o);
  if (!r.converged) throw NumericError("TestFunction::eval_quadrature: quadrature did not converge");
  return 2.0 * (flat + r.value);
}

const TestFunction::Samples& TestFunction::samples() const {
  std::call_once(samples_->once, [this] {
    const double top = plateau_.a() + plateau_.b();
    samples_->step = 1.0 / (4.0 * top);
    const auto n = static_cast<std::size_t>(std::ceil(300.0 / samples_->step));
    samples_->f.resize(n + 1);
    for (std::size_t j = 0; j <= n; ++j) samples_->f[j] = (*this)(j * samples_->step);
  });
  return *samples_;
}

std::complex<double> TestFunction::moment_transform(int n, double x) const {
  if (n < 0) throw UsageError("moment_transform: n must be non-negative");
  const Samples& s = samples();
  // f even: y^n f(y) is even for even n (cosine part survives) and odd for odd
  // n (sine part survives, times i).
  CompensatedSum acc;
  const double w = 2.0 * kPi * x;
  for (std::size_t j = s.f.size() - 1; j >= 1; --j) {
    const double y = j * s.step;
    const double trig = (n % 2 == 0) ? std::cos(w * y) : std::sin(w * y);
    acc.add(std::pow(y, n) * s.f[j] * trig);
  }
  double total = 2.0 * s.step * acc.value();
  if (n == 0) total += s.step * s.f[0];
  if (n % 2 == 0) return {total, 0.0};
  return {0.0, total};
}

double TestFunction::fourier_numeric(double x) const { return moment_transform(0, x).real(); }

TestFunction make_f_from_plateau(const Plateau& plateau, bool positive_class) {
  return TestFunction(plateau, positive_class);
}

std::shared_ptr<const TestFunction> default_test_function() {
  static const std::shared_ptr<const TestFunction> f =
      std::make_shared<const TestFunction>(make_plateau(make_bump(1.0), 2.5));
  return f;
}

// ---------------------------------------------------------------------------

ClassReport verify_class(const TestFunction& f, int k_max, int q_max) {
  ClassReport rep;
  if (k_max < 0 || q_max < 0) throw UsageError("verify_class: k_max and q_max must be >= 0");
  if (k_max > 6 || q_max > 6) {
    rep.diagnostics.push_back("k_max/q_max capped at 6 (derivative depth limit)");
    k_max = std::min(k_max, 6);
    q_max = std::min(q_max, 6);
  }
  rep.k_max = k_max;
  rep.q_max = q_max;
  rep.alpha = f.alpha();
  rep.beta = f.beta();

  // Sample grid: fine where f oscillates with visible amplitude, coarse in the tail.
  std::vector<double> xs;
  for (double x = 0.0; x < 40.0; x += 0.02) xs.push_back(x);
  for (double x = 40.0; x <= 160.0; x += 0.1) xs.push_back(x);

  rep.sup.assign(k_max + 1, std::vector<double>(q_max + 1, 0.0));
  for (int q = 0; q <= q_max; ++q) {
    for (double x : xs) {
      const double d = std::abs(q == 0 ? f(x) : f.derivative(x, q));
      double xp = 1.0;
      for (int k = 0; k <= k_max; ++k) {
        rep.sup[k][q] = std::max(rep.sup[k][q], xp * d);
        xp *= x;
      }
    }
  }
  auto kpow = [](int k, double e) { return k == 0 ? 1.0 : std::pow(k, k * e); };
  rep.C = rep.sup[0][0];
  rep.B = 0.0;
  for (int q = 1; q <= q_max; ++q)
    rep.B = std::max(rep.B, std::pow(rep.sup[0][q] / (rep.C * kpow(q, rep.beta)), 1.0 / q));
  rep.A = 0.0;
  for (int k = 1; k <= k_max; ++k)
    for (int q = 0; q <= q_max; ++q) {
      const double denom = rep.C * std::pow(rep.B, q) * kpow(q, rep.beta) * kpow(k, rep.alpha);
      rep.A = std::max(rep.A, std::pow(rep.sup[k][q] / denom, 1.0 / k));
    }
  rep.class_bound_holds = true;
  for (int k = 0; k <= k_max; ++k)
    for (int q = 0; q <= q_max; ++q) {
      const double bound = rep.C * std::pow(rep.A, k) * std::pow(rep.B, q) * kpow(q, rep.beta) *
                           kpow(k, rep.alpha);
      if (rep.sup[k][q] > bound * (1.0 + 1e-12)) rep.class_bound_holds = false;
    }

  rep.decay_a = f.decay().a;
  rep.decay_C = f.decay().C;
  rep.decay_bound_holds = rep.decay_a > 0.0;
  for (double x = 0.0; x <= rep.decay_check_x; x += 0.005) {
    const double env = rep.decay_C * std::exp(-rep.decay_a * std::pow(x, 1.0 / rep.alpha));
    if (std::abs(f(x)) > env * (1.0 + 1e-12)) rep.decay_bound_holds = false;
  }
  return rep;
}

ConvolutionKernelSpec make_kernel_spec(std::shared_ptr<const TestFunction> f, double delta, double T,
                                       double amplitude) {
  if (!f) throw UsageError("make_kernel_spec: missing test function");
  if (!(delta > 0.0)) throw UsageError("make_kernel_spec: delta must be positive");
  if (!(T > 2.0 * kPi)) throw UsageError("make_kernel_spec: T must exceed 2 pi");
  ConvolutionKernelSpec s;
  s.testfn = std::move(f);
  s.T = T;
  s.delta = delta;
  s.G = delta / std::log(T / (2.0 * kPi));
  s.amplitude = amplitude;
  return s;
}

}  // namespace hz

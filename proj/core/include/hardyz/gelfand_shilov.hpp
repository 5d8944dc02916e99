#pragma once

#include <complex>
#include <memory>
#include <string>
#include <vector>

namespace hz {

/// Smooth bump phi(x) = c exp(-1/(1 - (x/a)^2)) on (-a, a), zero outside,
/// normalized to unit integral.
class Bump {
 public:
  explicit Bump(double a_support);
  double operator()(double x) const;
  double support() const { return a_; }
  /// int_{-a}^{y} phi.
  double cumulative(double y) const;
  /// Fourier transform int phi(u) e^{-2 pi i x u} du (real, even), by the
  /// trapezoid rule on 2048 panels; exact zero beyond |x| a > 400.
  double transform(double x) const;

 private:
  double a_;
  double norm_;  // 1 / int exp(-1/(1-(x/a)^2))
  std::vector<double> nodes_;  // phi at u_j = j h, j = 0..1024, h = a/1024
  double h_;
};

Bump make_bump(double a_support);

/// Phi(x) = int_{x-b}^{x+b} phi: 1 on |x| <= b - a, 0 on |x| >= b + a.
class Plateau {
 public:
  Plateau(Bump phi, double b);
  double operator()(double x) const;
  const Bump& bump() const { return phi_; }
  double b() const { return b_; }
  double a() const { return phi_.support(); }

 private:
  Bump phi_;
  double b_;
};

/// Requires b > max(1, a).
Plateau make_plateau(const Bump& phi, double b);

/// Decay envelope |f(x)| <= C exp(-a |x|^{1/alpha}) fitted from samples.
struct DecayFit {
  double alpha = 2.0;
  double a = 0.0;
  double C = 0.0;
  double x_max = 0.0;  // where C exp(-a x^{1/alpha}) reaches 1e-14
};

/// f(x) = int Phi(u) e^{-2 pi i x u} du, even and real, with f-hat = Phi.
/// Immutable; safe to share across threads.
class TestFunction {
 public:
  explicit TestFunction(Plateau plateau, bool positive_class = false);

  /// Closed form sin(2 pi b x)/(pi x) * phi-hat(x); f(0) = 2b.
  double operator()(double x) const;
  /// f^{(q)}(x) = int Phi(u) (2 pi u)^q cos(2 pi x u + q pi/2) du by the
  /// trapezoid rule on 4096 panels. q in [0, 12].
  double derivative(double x, int q) const;
  /// f(x) by adaptive Gauss-Kronrod of 2 int_0^{b+a} Phi(u) cos(2 pi x u) du,
  /// Phi itself by adaptive quadrature. Independent of the other routes; slow.
  double eval_quadrature(double x) const;
  /// f-hat(x) = Phi(x) (exact by construction).
  double fourier(double x) const { return plateau_(x); }
  /// int f(y) e^{2 pi i x y} dy from samples of f (trapezoid, alias-free for
  /// |x| < 3(b + a)).
  double fourier_numeric(double x) const;
  /// int y^n f(y) e^{2 pi i x y} dy, same sampling.
  std::complex<double> moment_transform(int n, double x) const;

  double a_support() const { return plateau_.a(); }
  double b_plateau() const { return plateau_.b(); }
  const Plateau& plateau() const { return plateau_; }
  bool positive_class() const { return positive_class_; }

  // Class parameters: f-hat has compact support, so beta = 0 with
  // B = 2 pi (b + a); alpha comes from the decay fit.
  double alpha() const { return decay_.alpha; }
  double beta() const { return 0.0; }
  const DecayFit& decay() const { return decay_; }

 private:
  struct Samples;
  const Samples& samples() const;

  Plateau plateau_;
  bool positive_class_;
  double hu_;                      // derivative-route node spacing
  std::vector<double> phi_nodes_;  // Phi(j hu), j = 0..2048
  DecayFit decay_;
  std::shared_ptr<Samples> samples_;
};

TestFunction make_f_from_plateau(const Plateau& plateau, bool positive_class = false);

/// Default construction used throughout: a = 1, b = 2.5.
std::shared_ptr<const TestFunction> default_test_function();

struct ClassReport {
  int k_max = 0;
  int q_max = 0;
  double alpha = 0.0;
  double beta = 0.0;
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;
  /// sup_x |x^k f^{(q)}(x)| over the sample grid, indexed [k][q].
  std::vector<std::vector<double>> sup;
  bool class_bound_holds = false;  // |x^k f^(q)| <= C A^k B^q k^{k alpha} q^{q beta} on samples
  double decay_a = 0.0;
  double decay_C = 0.0;
  double decay_check_x = 30.0;
  bool decay_bound_holds = false;  // |f| <= C e^{-a |x|^{1/alpha}} on |x| <= decay_check_x
  std::vector<std::string> diagnostics;
};

/// Empirical fit of the (A, B, C) constants and the decay envelope. k_max and
/// q_max are capped at 6 (with a diagnostic).
ClassReport verify_class(const TestFunction& f, int k_max, int q_max);

/// Convolution kernel x -> amplitude * f(x / G) with G = delta / log(T / 2pi).
struct ConvolutionKernelSpec {
  std::shared_ptr<const TestFunction> testfn;
  double T = 0.0;
  double delta = 0.0;
  double G = 0.0;
  double amplitude = 1.0;
};

ConvolutionKernelSpec make_kernel_spec(std::shared_ptr<const TestFunction> f, double delta, double T,
                                       double amplitude = 1.0);

}  // namespace hz

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hardyz/zeta_eval.hpp"

namespace hz {

enum class ZeroMethod { sign_change, extremum_touch };
const char* to_string(ZeroMethod m);

struct ZeroRecord {
  double gamma = 0.0;
  double residual = 0.0;  // |Z(gamma)| from the oracle
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  ZeroMethod method = ZeroMethod::sign_change;
};

/// Z sampler used by scans: Riemann-Siegel where its error bound leaves the
/// sign unambiguous, oracle below t = 50 or when |Z| is within 4 error bounds
/// of zero.
CriticalLineSample z_scan_sample(double t);

/// Mean spacing of zeros near height t, 2pi / log(t/2pi) (t clamped to >= 20).
double mean_zero_gap(double t);

struct ScanOptions {
  /// Fixed grid step; 0 selects the adaptive step step_factor * mean_zero_gap(t).
  double fixed_step = 0.0;
  double step_factor = 0.2;
  /// Refinement stops once the sign-change bracket is this narrow.
  double bracket_width = 1e-9;
};

struct ZeroScan {
  std::vector<ZeroRecord> zeros;
  std::vector<std::string> warnings;
  long samples = 0;
};

/// All sign changes of Z in [t_lo, t_hi], refined with the oracle. Requires
/// 10 <= t_lo <= t_hi. Sorted ascending.
ZeroScan scan_zeros_detail(double t_lo, double t_hi, const ScanOptions& opts = {});
std::vector<ZeroRecord> scan_zeros(double t_lo, double t_hi, const ScanOptions& opts = {});

/// Refines a sign-change bracket of Z (oracle) to width <= opts.bracket_width.
ZeroRecord refine_zero(double lo, double hi, double z_lo, double z_hi,
                       double bracket_width = 1e-9);

/// (T/2pi) log(T/2pi) - T/2pi + 7/8.
double riemann_von_mangoldt_main(double T);

struct CountSummary {
  double T = 0.0;
  long n_found = 0;
  double main_term = 0.0;
  double s_estimate = 0.0;  // n_found - main_term
  std::vector<std::string> warnings;
};

/// Throws UsageError when |Z(T)| < 1e-10 (T sits on a zero; move it).
CountSummary count_and_s(double T);

enum class LehmerKind { neg_local_max, pos_local_min, close_pair };
const char* to_string(LehmerKind k);

struct LehmerEvent {
  double t_ext = 0.0;
  double z_ext = 0.0;
  LehmerKind kind = LehmerKind::close_pair;
  std::optional<std::pair<double, double>> gap_pair;
  double closeness = 0.0;  // |Z| at t_ext
};

struct LehmerOptions {
  double threshold = 0.0005;
  double step = 0.005;
};

struct LehmerScan {
  std::vector<LehmerEvent> events;
  std::vector<ZeroRecord> zeros;
  long extrema_examined = 0;
  long samples = 0;
};

/// Oracle grid scan of [t_lo, t_hi] (t_lo > 0; heights below 10 are allowed).
/// Reports consecutive zeros whose midpoint |Z| is below the threshold and
/// every sign-preserving extremum (negative local maximum or positive local
/// minimum).
LehmerScan lehmer_scan_detail(double t_lo, double t_hi, const LehmerOptions& opts = {});
std::vector<LehmerEvent> lehmer_scan(double t_lo, double t_hi, double threshold = 0.0005);

struct Prop1Violation {
  double t;
  double value;  // (Z'/Z)'(t)
};

struct Prop1Report {
  double t_lo = 0.0;
  double t_hi = 0.0;
  int intervals = 0;
  long samples = 0;
  long skipped_near_zero = 0;  // samples with |Z| < 1e-6, excluded
  double max_value = 0.0;      // largest (Z'/Z)' seen
  double tolerance = 1e-6;
  std::vector<double> zeros;
  std::vector<Prop1Violation> violations;
  std::vector<std::string> diagnostics;
};

/// Samples (Z'/Z)' = (Z Z'' - Z'^2)/Z^2 between consecutive zeros and reports
/// every sample where it is >= tolerance. Endpoints must not be zeros.
Prop1Report prop1_check(double t_lo, double t_hi, double step = 0.01, double tolerance = 1e-6);

}  // namespace hz

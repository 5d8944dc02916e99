// hardyz: command-line front end. Every run writes <out-dir>/<command>.manifest.json.
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hardyz/hardyz.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

struct Run {
  std::string command;
  fs::path out_dir = ".";
  bool json_out = false;
  unsigned threads = 0;
  std::uint64_t seed = 42;
  json parameters = json::object();
  json tolerances = json::object();
  std::vector<std::string> outputs;

  // Relative paths land in the output directory.
  std::ofstream open_csv(const std::string& path) {
    fs::path p(path);
    if (p.is_relative()) p = out_dir / p;
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    std::ofstream os(p);
    if (!os) throw hz::UsageError("cannot open " + p.string() + " for writing");
    outputs.push_back(p.string());
    return os;
  }

  void emit(const json& summary, const std::string& text) const {
    if (json_out)
      std::cout << summary.dump(2) << '\n';
    else
      std::cout << text;
  }
};

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_manifest(const Run& run, int exit_code, const std::string& error) {
  json m;
  m["command"] = run.command;
  m["parameters"] = run.parameters;
  m["versions"] = {{"hardyz", HARDYZ_VERSION},
                   {"cli11", CLI11_VERSION},
                   {"nlohmann_json", std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." +
                                         std::to_string(NLOHMANN_JSON_VERSION_MINOR) + "." +
                                         std::to_string(NLOHMANN_JSON_VERSION_PATCH)},
                   {"compiler", __VERSION__},
                   {"cxx_standard", __cplusplus}};
  m["timestamp"] = utc_timestamp();
  m["threads"] = hz::thread_count();
  m["seed"] = run.seed;
  m["outputs"] = run.outputs;
  m["tolerances"] = run.tolerances;
  m["exit_code"] = exit_code;
  if (!error.empty()) m["error"] = error;
  std::error_code ec;
  fs::create_directories(run.out_dir, ec);
  std::ofstream os(run.out_dir / (run.command + ".manifest.json"));
  if (os) os << m.dump(2) << '\n';
}

std::string fmt(double x) { return hz::format_double(x); }

json zero_json(const hz::ZeroRecord& z) {
  return {{"gamma", z.gamma}, {"residual", z.residual}, {"bracket_lo", z.bracket_lo},
          {"bracket_hi", z.bracket_hi}, {"method", hz::to_string(z.method)}};
}

std::shared_ptr<const hz::TestFunction> test_function(double a, double b) {
  if (a == 1.0 && b == 2.5) return hz::default_test_function();
  return std::make_shared<const hz::TestFunction>(
      hz::make_f_from_plateau(hz::make_plateau(hz::make_bump(a), b)));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hardy Z-function toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Run run;
  std::string out_dir_flag;
  app.add_flag("--json", run.json_out, "JSON summary on stdout");
  app.add_option("--threads", run.threads, "worker threads (0 = logical cores)");
  app.add_option("--seed", run.seed, "seed for randomized grid choices")->capture_default_str();
  app.add_option("--out-dir", out_dir_flag, "output directory (default $HARDYZ_OUT_DIR or .)");
  app.set_version_flag("--version", HARDYZ_VERSION);

  // z-eval
  double ze_t = 0.0;
  std::string ze_method = "oracle";
  auto* z_eval = app.add_subcommand("z-eval", "evaluate Z(t)");
  z_eval->add_option("t", ze_t, "height")->required();
  z_eval->add_option("--method", ze_method, "rs | oracle")
      ->check(CLI::IsMember({"rs", "oracle"}))
      ->capture_default_str();

  // zeros
  double zs_lo = 0.0, zs_hi = 0.0, zs_step = 0.0;
  std::string zs_csv;
  auto* zeros = app.add_subcommand("zeros", "zeros of Z on [t_lo, t_hi]");
  zeros->add_option("t_lo", zs_lo)->required();
  zeros->add_option("t_hi", zs_hi)->required();
  zeros->add_option("--step", zs_step, "fixed sampling step (default adaptive)");
  zeros->add_option("--csv", zs_csv, "gamma, residual, bracket_lo, bracket_hi");

  // lehmer
  double lh_lo = 0.0, lh_hi = 0.0;
  hz::LehmerOptions lh_opts;
  std::string lh_csv;
  auto* lehmer = app.add_subcommand("lehmer", "near-coincident zeros and sign-preserving extrema");
  lehmer->add_option("t_lo", lh_lo)->required();
  lehmer->add_option("t_hi", lh_hi)->required();
  lehmer->add_option("--threshold", lh_opts.threshold)->capture_default_str();
  lehmer->add_option("--step", lh_opts.step)->capture_default_str();
  lehmer->add_option("--csv", lh_csv, "t_ext, z_ext, kind, closeness");

  // dh-search
  std::vector<double> dh_rect;
  std::string dh_csv;
  auto* dh = app.add_subcommand("dh-search", "zeros of the Davenport-Heilbronn function in a rectangle");
  dh->add_option("rect", dh_rect, "sigma_lo sigma_hi t_lo t_hi")->expected(4)->required();
  dh->add_option("--csv", dh_csv, "beta, gamma, residual, on_line");

  // conv-theorem1
  double c1_T = 0.0, c1_delta = 1.0, c1_a = 1.0, c1_b = 2.5;
  int c1_points = 200;
  bool c1_unchecked = false;
  std::string c1_csv;
  auto* conv = app.add_subcommand("conv-theorem1", "M_{Z,f}(t)/G versus Z(t) near T");
  conv->add_option("T", c1_T)->required();
  conv->add_option("--delta", c1_delta)->capture_default_str();
  conv->add_option("--points", c1_points)->capture_default_str();
  conv->add_option("--a", c1_a, "bump support")->capture_default_str();
  conv->add_option("--b", c1_b, "plateau half-width")->capture_default_str();
  conv->add_flag("--unchecked", c1_unchecked, "allow delta >= 2 pi (b - a)");
  conv->add_option("--csv", c1_csv, "t, m_over_g, z, residual");

  // lemma1
  double l1_T = 0.0, l1_V = 0.0, l1_delta = 1.0;
  auto* lemma1 = app.add_subcommand("lemma1", "Gaussian-weighted |M| lower bound");
  lemma1->add_option("T", l1_T)->required();
  lemma1->add_option("V", l1_V)->required();
  lemma1->add_option("--delta", l1_delta)->capture_default_str();

  // moment2
  std::vector<double> m2_T;
  double m2_fraction = 0.5;
  std::string m2_csv;
  auto* moment2 = app.add_subcommand("moment2", "int_0^T |zeta(1/2+it)|^2 dt and E_1(T)");
  moment2->add_option("T", m2_T, "one or more heights")->required();
  moment2->add_option("--panel-fraction", m2_fraction, "panel width / mean zero gap")->capture_default_str();
  moment2->add_option("--csv", m2_csv, "T, integral, main_term, e_term");

  // mu-curves
  std::string mu_csv;
  int mu_points = 1001;
  auto* mu = app.add_subcommand("mu-curves", "candidate mu(sigma) curves");
  mu->add_option("--csv", mu_csv, "sigma, mu_424, mu_425, mu_426");
  mu->add_option("--points", mu_points, "grid points on [-1/2, 3/2]")->capture_default_str();

  // mertens
  std::int64_t mt_N = 0;
  int mt_k = 3;
  std::string mt_csv;
  auto* mertens = app.add_subcommand("mertens", "Moebius table, Mertens sums, prime counts and li");
  mertens->add_option("N", mt_N)->required();
  mertens->add_option("--k", mt_k, "largest k tested in M(N)^{2k} <= N^{k+1}")->capture_default_str();
  mertens->add_option("--csv", mt_csv, "n, mu, M");

  auto resolve_out_dir = [&] {
    if (!out_dir_flag.empty())
      run.out_dir = out_dir_flag;
    else if (const char* env = std::getenv("HARDYZ_OUT_DIR"); env && *env)
      run.out_dir = env;
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    const auto subs = app.get_subcommands();
    run.command = subs.empty() ? "hardyz" : subs.front()->get_name();
    resolve_out_dir();
    write_manifest(run, kExitUsage, e.what());
    return kExitUsage;
  }

  run.command = app.get_subcommands().front()->get_name();
  resolve_out_dir();
  hz::set_thread_count(run.threads);

  int code = kExitOk;
  std::string error;
  try {
    if (*z_eval) {
      run.parameters = {{"t", ze_t}, {"method", ze_method}};
      const hz::CriticalLineSample s = ze_method == "rs" ? hz::z_rs(ze_t) : hz::z_oracle(ze_t);
      run.tolerances["err_bound"] = s.err_bound;
      json j{{"t", s.t}, {"z", s.z_value}, {"method", hz::to_string(s.method)}, {"err_bound", s.err_bound}};
      run.emit(j, "Z(" + fmt(s.t) + ") = " + fmt(s.z_value) + "  [" + hz::to_string(s.method) +
                      ", err <= " + fmt(s.err_bound) + "]\n");
    } else if (*zeros) {
      run.parameters = {{"t_lo", zs_lo}, {"t_hi", zs_hi}, {"step", zs_step}};
      hz::ScanOptions o;
      o.fixed_step = zs_step;
      run.tolerances["bracket_width"] = o.bracket_width;
      const hz::ZeroScan scan = hz::scan_zeros_detail(zs_lo, zs_hi, o);
      if (!zs_csv.empty()) {
        auto os = run.open_csv(zs_csv);
        hz::write_csv_header(os, {"gamma", "residual", "bracket_lo", "bracket_hi"});
        for (const auto& z : scan.zeros) hz::CsvRow(os) << z.gamma << z.residual << z.bracket_lo << z.bracket_hi;
      }
      json j{{"t_lo", zs_lo}, {"t_hi", zs_hi}, {"count", scan.zeros.size()}, {"samples", scan.samples},
             {"warnings", scan.warnings}, {"zeros", json::array()}};
      std::string text = std::to_string(scan.zeros.size()) + " zeros in [" + fmt(zs_lo) + ", " + fmt(zs_hi) + "]\n";
      for (const auto& z : scan.zeros) {
        j["zeros"].push_back(zero_json(z));
        text += "  " + fmt(z.gamma) + "  residual " + fmt(z.residual) + "\n";
      }
      for (const auto& w : scan.warnings) text += "warning: " + w + "\n";
      run.emit(j, text);
    } else if (*lehmer) {
      run.parameters = {{"t_lo", lh_lo}, {"t_hi", lh_hi}, {"threshold", lh_opts.threshold}, {"step", lh_opts.step}};
      run.tolerances["threshold"] = lh_opts.threshold;
      const hz::LehmerScan scan = hz::lehmer_scan_detail(lh_lo, lh_hi, lh_opts);
      if (!lh_csv.empty()) {
        auto os = run.open_csv(lh_csv);
        hz::write_csv_header(os, {"t_ext", "z_ext", "kind", "closeness"});
        for (const auto& e : scan.events) hz::CsvRow(os) << e.t_ext << e.z_ext << hz::to_string(e.kind) << e.closeness;
      }
      json j{{"t_lo", lh_lo}, {"t_hi", lh_hi}, {"zeros", scan.zeros.size()},
             {"extrema_examined", scan.extrema_examined}, {"events", json::array()}};
      std::string text = std::to_string(scan.zeros.size()) + " zeros, " + std::to_string(scan.extrema_examined) +
                         " extrema, " + std::to_string(scan.events.size()) + " events\n";
      for (const auto& e : scan.events) {
        json ej{{"t_ext", e.t_ext}, {"z_ext", e.z_ext}, {"kind", hz::to_string(e.kind)}, {"closeness", e.closeness}};
        if (e.gap_pair) ej["gap_pair"] = {e.gap_pair->first, e.gap_pair->second};
        j["events"].push_back(ej);
        text += "  " + std::string(hz::to_string(e.kind)) + " at " + fmt(e.t_ext) + ", Z = " + fmt(e.z_ext) + "\n";
      }
      run.emit(j, text);
    } else if (*dh) {
      run.parameters = {{"sigma_lo", dh_rect[0]}, {"sigma_hi", dh_rect[1]}, {"t_lo", dh_rect[2]}, {"t_hi", dh_rect[3]}};
      hz::DHSearchOptions o;
      run.tolerances["newton_residual"] = o.newton_residual;
      const hz::DHSearch s = hz::dh_zero_search_detail(dh_rect[0], dh_rect[1], dh_rect[2], dh_rect[3], o);
      if (!dh_csv.empty()) {
        auto os = run.open_csv(dh_csv);
        hz::write_csv_header(os, {"beta", "gamma", "residual", "on_line"});
        for (const auto& z : s.zeros) hz::CsvRow(os) << z.position.real() << z.position.imag() << z.residual << z.on_line;
      }
      json j{{"winding", s.winding}, {"cells", s.cells}, {"zeros", json::array()}, {"diagnostics", s.diagnostics}};
      std::string text = std::to_string(s.zeros.size()) + " zeros (winding " + std::to_string(s.winding) + ")\n";
      for (const auto& z : s.zeros) {
        j["zeros"].push_back({{"beta", z.position.real()}, {"gamma", z.position.imag()},
                              {"residual", z.residual}, {"on_line", z.on_line}});
        text += "  " + fmt(z.position.real()) + " + " + fmt(z.position.imag()) + "i  residual " + fmt(z.residual) +
                (z.on_line ? "  on line\n" : "  off line\n");
      }
      run.emit(j, text);
    } else if (*conv) {
      run.parameters = {{"T", c1_T}, {"delta", c1_delta}, {"points", c1_points}, {"a", c1_a}, {"b", c1_b},
                        {"unchecked", c1_unchecked}};
      const auto spec = hz::make_kernel_spec(test_function(c1_a, c1_b), c1_delta, c1_T);
      hz::Theorem1Options o;
      o.enforce_hypothesis = !c1_unchecked;
      const hz::ConvolutionProfile p = hz::theorem1_residual_study(c1_T, c1_points, spec, o);
      run.tolerances["quadrature_err"] = p.quadrature_err;
      if (!c1_csv.empty()) {
        auto os = run.open_csv(c1_csv);
        hz::write_csv_header(os, {"t", "m_over_g", "z", "residual"});
        for (const auto& r : p.grid)
          hz::CsvRow(os) << r.t << r.m_value / spec.G << r.g_z_value / spec.G << r.residual / spec.G;
      }
      json j{{"T", c1_T},
             {"max_residual_over_g", p.max_residual_over_g},
             {"quadrature_err", p.quadrature_err},
             {"window", p.window},
             {"within_hypothesis", p.within_hypothesis},
             {"spec", {{"a", c1_a}, {"b", c1_b}, {"delta", spec.delta}, {"G", spec.G}, {"amplitude", spec.amplitude}}}};
      run.emit(j, "max |M/G - Z| = " + fmt(p.max_residual_over_g) + " over " + std::to_string(p.grid.size()) +
                      " points (quadrature budget " + fmt(p.quadrature_err) + ")\n");
    } else if (*lemma1) {
      run.parameters = {{"T", l1_T}, {"V", l1_V}, {"delta", l1_delta}};
      const auto spec = hz::make_kernel_spec(hz::default_test_function(), l1_delta, l1_T);
      const hz::Lemma1Result r = hz::lemma1_lower_bound(l1_T, l1_V, spec);
      run.tolerances["tolerance"] = r.tolerance;
      json j{{"T", r.T}, {"V", r.V}, {"L", r.L}, {"G", r.G}, {"lhs", r.lhs}, {"rhs", r.rhs},
             {"error_terms", r.error_terms}, {"quadrature_err", r.quadrature_err}, {"holds", r.holds},
             {"v_in_range", r.v_in_range}, {"diagnostics", r.diagnostics}};
      std::string text = "lhs " + fmt(r.lhs) + " vs rhs " + fmt(r.rhs) + (r.holds ? "  holds\n" : "  fails\n");
      for (const auto& d : r.diagnostics) text += "note: " + d + "\n";
      run.emit(j, text);
    } else if (*moment2) {
      run.parameters = {{"T", m2_T}, {"panel_fraction", m2_fraction}};
      hz::MomentOptions o;
      o.panel_fraction = m2_fraction;
      const auto recs = hz::second_moments(m2_T, o);
      if (!m2_csv.empty()) {
        auto os = run.open_csv(m2_csv);
        hz::write_csv_header(os, {"T", "integral", "main_term", "e_term"});
        for (const auto& r : recs) hz::CsvRow(os) << r.T << r.integral << r.main_term << r.e_term;
      }
      json j = json::array();
      std::string text;
      double err = 0.0;
      for (const auto& r : recs) {
        j.push_back({{"T", r.T}, {"integral", r.integral}, {"main_term", r.main_term}, {"e_term", r.e_term},
                     {"abs_error", r.abs_error}});
        text += "T = " + fmt(r.T) + ": integral " + fmt(r.integral) + ", E1 = " + fmt(r.e_term) + "\n";
        err = std::max(err, r.abs_error);
      }
      run.tolerances["abs_error"] = err;
      run.emit(j, text);
    } else if (*mu) {
      run.parameters = {{"points", mu_points}};
      if (mu_points < 2) throw hz::UsageError("mu-curves: --points must be >= 2");
      if (!mu_csv.empty()) {
        auto os = run.open_csv(mu_csv);
        hz::write_csv_header(os, {"sigma", "mu_424", "mu_425", "mu_426"});
        for (int i = 0; i < mu_points; ++i) {
          const double s = -0.5 + 2.0 * i / (mu_points - 1);
          hz::CsvRow(os) << s << hz::mu_curve(hz::MuVariant::curve_4_24, s)
                         << hz::mu_curve(hz::MuVariant::curve_4_25, s) << hz::mu_curve(hz::MuVariant::curve_4_26, s);
        }
      }
      const hz::ConvexityReport rep = hz::convexity_report();
      json j{{"all_pass", rep.all_pass()}, {"sharpening", rep.sharpening}, {"curves", json::array()}};
      std::string text;
      for (const auto& c : rep.curves) {
        j["curves"].push_back({{"variant", hz::to_string(c.variant)},
                               {"mu_half", hz::mu_curve(c.variant, 0.5)},
                               {"half_is_one_eighth", c.half_is_one_eighth},
                               {"convex", c.convex},
                               {"nonincreasing", c.nonincreasing},
                               {"functional_relation", c.functional_relation},
                               {"max_breakpoint_jump", c.max_breakpoint_jump}});
        text += std::string(hz::to_string(c.variant)) + ": mu(1/2) = " + fmt(hz::mu_curve(c.variant, 0.5)) +
                (c.convex && c.nonincreasing && c.functional_relation ? ", checks pass\n" : ", CHECK FAILED\n");
      }
      run.emit(j, text);
    } else if (*mertens) {
      run.parameters = {{"N", mt_N}, {"k", mt_k}};
      if (mt_k < 1) throw hz::UsageError("mertens: --k must be >= 1");
      const hz::MertensTable t = hz::mobius_sieve(mt_N);
      if (!mt_csv.empty()) {
        auto os = run.open_csv(mt_csv);
        hz::write_csv_header(os, {"n", "mu", "M"});
        for (std::int64_t n = 1; n <= mt_N; ++n)
          hz::CsvRow(os) << static_cast<long long>(n) << t.mobius(n) << static_cast<long long>(t.mertens(n));
      }
      json checks = json::object();
      bool all = true;
      for (int k = 1; k <= mt_k; ++k) {
        const bool ok = hz::check_1_7(t, mt_N, k);
        checks["k" + std::to_string(k)] = ok;
        all = all && ok;
      }
      const hz::MertensScan ms = hz::mertens_sqrt_scan(t);
      json j{{"N", mt_N}, {"M", t.mertens(mt_N)}, {"check_1_7", checks},
             {"max_abs_M_over_sqrt_x", ms.max_ratio}, {"argmax", ms.argmax}};
      std::string text = "M(" + std::to_string(mt_N) + ") = " + std::to_string(t.mertens(mt_N)) +
                         ", M(N)^{2k} <= N^{k+1} for k <= " + std::to_string(mt_k) + ": " + (all ? "yes" : "no") +
                         "\nmax |M(x)|/sqrt(x) = " + fmt(ms.max_ratio) + " at x = " + std::to_string(ms.argmax) + "\n";
      if (mt_N >= 2) {
        const std::int64_t pi = hz::pi_count(mt_N);
        const hz::LiValue l = hz::li_detail(static_cast<double>(mt_N));
        j["pi"] = pi;
        j["li"] = l.value;
        j["li_asymptotic_3"] = l.asymptotic;
        text += "pi(N) = " + std::to_string(pi) + ", li(N) = " + fmt(l.value) + "\n";
      }
      run.emit(j, text);
    }
  } catch (const hz::UsageError& e) {
    code = kExitUsage;
    error = e.what();
  } catch (const hz::Error& e) {
    code = kExitNumeric;
    error = e.what();
  } catch (const std::filesystem::filesystem_error& e) {
    code = kExitUsage;
    error = e.what();
  } catch (const std::exception& e) {
    code = kExitNumeric;
    error = e.what();
  }
  if (!error.empty()) std::cerr << "error: " << error << '\n';
  write_manifest(run, code, error);
  return code;
}

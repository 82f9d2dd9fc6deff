// Acceptance suite: one pass/fail line per criterion, non-zero exit when any
// criterion fails. Monte-Carlo-heavy criteria run with the reduced engine
// profile (512-node grid, 24 p_e quadrature nodes, 32 LO candidates), which
// the estimator's accuracy is insensitive to; resolution-pinned criteria (4, 5)
// use the full defaults. Everything is single-threaded and seeded.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "bfe/adaptive.hpp"
#include "bfe/analysis.hpp"
#include "bfe/locking.hpp"
#include "bfe/posterior.hpp"
#include "bfe/rng.hpp"
#include "bfe/runner.hpp"
#include "bfe/schedule.hpp"
#include "bfe/signal.hpp"

using namespace bfe;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
  std::printf("[%s] %2d %-24s %s\n", pass ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

std::string fmt(const char* format, ...) {
  char buffer[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buffer, sizeof buffer, format, args);
  va_end(args);
  return buffer;
}

Scheme make_scheme(double a, int g, int m_tilde, int m_b, double t_max_s, double t_min_s = 0.0) {
  Scheme s;
  s.growth_ratio = a;
  s.steps_per_growth = g;
  s.plateau_steps = m_tilde;
  s.iterations = m_b;
  s.t_max_s = t_max_s;
  s.t_min_s = t_min_s;
  return s;
}

// Reduced Monte Carlo profile. The grid must stay finer than the scheme's
// final posterior width (sigma/dx >= 0.6 keeps the moment quantization error
// orders below the quantum projection noise), so plateau schemes get 1024
// nodes while short ramps run at 512.
BfeConfig mc_config(const Scheme& scheme) {
  BfeConfig cfg;
  cfg.scheme = scheme;
  cfg.snr_r = 1540.0;
  double dx_512 = 1.0 / scheme.t_max_s / 511.0;
  cfg.grid_size = predicted_precision(scheme, cfg.snr_r) > 0.6 * dx_512 ? 512 : 1024;
  cfg.utility_quadrature_points = 24;
  cfg.lo_candidate_count = 32;
  return cfg;
}

double sample_std(const std::vector<double>& values) {
  double sum = 0.0, sum2 = 0.0;
  for (double v : values) {
    sum += v;
    sum2 += v * v;
  }
  double n = static_cast<double>(values.size());
  return std::sqrt(std::max((sum2 - sum * sum / n) / (n - 1.0), 0.0));
}

// Monte Carlo sweep: per-iteration sample std of (f_est - f_c) across trials,
// ground truth drawn per trial from the middle half of the initial interval.
struct McResult {
  std::vector<double> t_j;
  std::vector<double> std_j;
};

McResult mc_std_curve(const BfeConfig& base, int trials, std::uint64_t master) {
  Schedule schedule = build_schedule(base.scheme);
  double width = 1.0 / schedule.times_s.front();
  std::vector<std::vector<double>> errors(schedule.times_s.size());
  McResult out;
  for (int t = 0; t < trials; ++t) {
    std::uint64_t ts = Rng::derive_stream(master, static_cast<std::uint64_t>(t));
    SignalModel model;
    model.snr_r = base.snr_r;
    Rng truth_rng(Rng::derive_stream(ts, 3));
    model.f_c_true_hz = truth_rng.uniform(-0.25 * width, 0.25 * width);
    BfeConfig cfg = base;
    cfg.seed = Rng::derive_stream(ts, 2);
    Rng rng(Rng::derive_stream(ts, 1));
    EstimationTrace trace = bfe_run_simulated(cfg, model, rng);
    for (std::size_t j = 0; j < trace.steps.size(); ++j) {
      errors[j].push_back(trace.steps[j].f_est_hz - model.f_c_true_hz);
    }
    if (out.t_j.empty()) {
      for (const EstimationStep& s : trace.steps) out.t_j.push_back(s.cumulative_time_s);
    }
  }
  for (auto& e : errors) out.std_j.push_back(sample_std(e));
  return out;
}

double slope_over(const McResult& curve, int from_1based, int to_1based) {
  std::vector<double> x, y;
  for (int j = from_1based; j <= to_1based; ++j) {
    x.push_back(curve.t_j[static_cast<std::size_t>(j - 1)]);
    y.push_back(curve.std_j[static_cast<std::size_t>(j - 1)]);
  }
  return fit_loglog_slope(x, y, 0, x.size() - 1).slope;
}

// ---------------------------------------------------------------- criteria --

void criterion_1_heisenberg_scaling() {
  auto start = std::chrono::steady_clock::now();
  Scheme scheme = make_scheme(1.25, 1, 0, 25, 0.020);
  McResult curve = mc_std_curve(mc_config(scheme), 200, 0xC1);
  double slope = slope_over(curve, 6, 25);
  double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool pass = slope > -1.15 && slope < -0.85 && elapsed < 300.0;
  report(1, "heisenberg-scaling", pass,
         fmt("ramp slope %.3f (want -1.0 +/- 0.15), %d trials, %.0f s (budget 300 s)", slope,
             200, elapsed));
}

void criterion_2_analytic_precision() {
  struct Case {
    Scheme scheme;
    const char* label;
  };
  std::vector<Case> cases = {
      {make_scheme(10.0 / 9.0, 1, 40, 85, 0.020, 0.2e-3), "a=10/9 g=1 M~=40 Mb=85"},
      {make_scheme(1.25, 1, 44, 66, 0.020, 0.2e-3), "a=1.25 g=1 M~=44 Mb=66"},
      {make_scheme(1.25, 2, 37, 81, 0.020, 0.2e-3), "a=1.25 g=2 M~=37 Mb=81"},
  };
  bool pass = true;
  std::string detail;
  for (std::size_t k = 0; k < cases.size(); ++k) {
    McResult curve = mc_std_curve(mc_config(cases[k].scheme), 200, 0xC200 + k);
    double got = curve.std_j.back();
    double predicted = predicted_precision(cases[k].scheme, 1540.0);
    double rel = got / predicted - 1.0;
    pass = pass && std::abs(rel) <= 0.30;
    detail += fmt("%s{%s: mc %.4f vs %.4f Hz, %+.0f%%}", k ? " " : "", cases[k].label, got,
                  predicted, 100.0 * rel);
  }
  report(2, "analytic-precision", pass, detail);
}

void criterion_3_plateau_crossover() {
  // 1000 ms budget: limited by T_max = 20 ms vs unlimited growth to 200 ms.
  Scheme limited = make_scheme(1.25, 1, 45, 77, 0.020);
  Scheme unlimited = make_scheme(1.25, 1, 0, 32, 0.200);
  McResult lim = mc_std_curve(mc_config(limited), 200, 0xC31);
  McResult unl = mc_std_curve(mc_config(unlimited), 200, 0xC32);
  int j = limited.ramp_end();  // 32
  double ramp_slope = slope_over(lim, 6, j);
  double plateau_slope = slope_over(lim, j + 8, limited.iterations);
  double unlimited_slope = slope_over(unl, 6, unlimited.iterations);
  bool pass = plateau_slope > -0.6 && plateau_slope < -0.4 && ramp_slope < -0.75;
  report(3, "plateau-crossover", pass,
         fmt("limited: ramp %.3f -> plateau %.3f (want -0.5 +/- 0.1); unlimited ramp %.3f; "
             "budgets %.0f / %.0f ms",
             ramp_slope, plateau_slope, unlimited_slope,
             1e3 * total_time(build_schedule(limited)),
             1e3 * total_time(build_schedule(unlimited))));
}

// Independent oracles for criterion 4, reimplemented on top of the generic
// grid operations only.

double l1_vs_fine_grid(double t_r, double r, double p_e, double f_lo,
                       const FrequencyInterval& interval) {
  GridDistribution prior = uniform_prior(interval, 2048);
  auto like = [&](double f_c) { return gaussian_likelihood(p_e, f_c, f_lo, 0.0, t_r, r); };
  GridDistribution post = bayes_update(prior, like);
  const std::size_t refine = 512;
  const std::size_t fine_n = (prior.size() - 1) * refine + 1;  // ~2^20 nodes
  double dx = interval.width() / static_cast<double>(fine_n - 1);
  std::vector<double> fine(fine_n);
  double mass = 0.0;
  for (std::size_t k = 0; k < fine_n; ++k) {
    double f = interval.lo() + dx * static_cast<double>(k);
    fine[k] = like(f) / interval.width();
    mass += (k == 0 || k == fine_n - 1) ? 0.5 * fine[k] : fine[k];
  }
  mass *= dx;
  double l1 = 0.0;
  for (std::size_t k = 0; k < prior.size(); ++k) {
    double diff = std::abs(post.weights()[k] - fine[k * refine] / mass);
    l1 += (k == 0 || k + 1 == prior.size()) ? 0.5 * diff : diff;
  }
  return l1 * post.spacing();
}

double utility_generic(const GridDistribution& prior, double f_hz, double t_r_s, double snr_r,
                       int points) {
  double eps = 0.5 / snr_r;
  double h_prior = entropy(prior);
  double du = 1.0 / static_cast<double>(points - 1);
  double total = 0.0;
  for (int m = 0; m < points; ++m) {
    double u = du * static_cast<double>(m);
    double edge = std::sin(0.5 * std::numbers::pi * u);
    double p_e = eps + (1.0 - 2.0 * eps) * edge * edge;
    double jac = (1.0 - 2.0 * eps) * 0.5 * std::numbers::pi * std::sin(std::numbers::pi * u);
    double weight = du * jac * ((m == 0 || m == points - 1) ? 0.5 : 1.0);
    if (weight == 0.0) continue;
    auto like = [&](double f_c) {
      return gaussian_likelihood(p_e, f_c, f_hz, 0.0, t_r_s, snr_r);
    };
    auto posterior = try_bayes_update(prior, like);
    if (!posterior) continue;
    double evidence = 0.0;
    for (std::size_t k = 0; k < prior.size(); ++k) {
      double v = like(prior.node(k)) * prior.weights()[k];
      evidence += (k == 0 || k + 1 == prior.size()) ? 0.5 * v : v;
    }
    evidence *= prior.spacing();
    total += weight * evidence * (h_prior - entropy(*posterior));
  }
  return std::max(total, 0.0);
}

void criterion_4_oracle_equivalence() {
  Rng rng(0xC4);
  int n = 20;

  // bayes_update vs a ~2^20-node product-and-normalize oracle.
  double worst_l1 = 0.0;
  for (int k = 0; k < n; ++k) {
    double t_r = rng.uniform(1e-3, 0.02);
    double r = rng.uniform(500.0, 5000.0);
    double p_e = rng.uniform(0.15, 0.85);
    double center = rng.uniform(-1000.0, 1000.0);
    FrequencyInterval interval = FrequencyInterval::centered(center, 1.0 / t_r);
    double f_lo = center + rng.uniform(-0.05, 0.05) * interval.width();
    worst_l1 = std::max(worst_l1, l1_vs_fine_grid(t_r, r, p_e, f_lo, interval));
  }
  bool pass_update = worst_l1 < 1e-6;

  // utility at 64 nodes vs the 4096-node generic-operation oracle.
  double worst_util = 0.0;
  for (int k = 0; k < n; ++k) {
    double t_r = 1e-3;
    double r = 1540.0;
    FrequencyInterval interval = FrequencyInterval::centered(rng.uniform(-200.0, 200.0),
                                                             1.0 / t_r);
    GridDistribution prior = uniform_prior(interval, 512);
    double f = rng.uniform(interval.lo(), interval.hi());
    double coarse = utility(prior, f, t_r, r, 64);
    double fine = utility_generic(prior, f, t_r, r, 4096);
    worst_util = std::max(worst_util, std::abs(coarse / fine - 1.0));
  }
  bool pass_util = worst_util < 0.01;

  // select_lo_frequency vs an exhaustive 10x denser scan. The gain surface
  // carries near-degenerate twin maxima (mirror mid-fringe points), so the
  // two scans may legitimately settle on different twins: the selection
  // matches the dense scan when it lands within one coarse spacing or
  // attains the dense optimum's utility within 0.5%.
  int candidates = 32;
  double worst_sel = 0.0;
  for (int k = 0; k < n; ++k) {
    double t_r = rng.uniform(2e-3, 0.02);
    double center = rng.uniform(-50.0, 50.0);
    FrequencyInterval interval = FrequencyInterval::centered(center, 1.0 / t_r);
    double w = interval.width();
    double mu1 = center + rng.uniform(-0.30, -0.05) * w;
    double mu2 = center + rng.uniform(0.05, 0.30) * w;
    double s1 = rng.uniform(0.02, 0.08) * w;
    double s2 = rng.uniform(0.02, 0.08) * w;
    double a2 = rng.uniform(0.2, 0.6);
    GridDistribution prior = bayes_update(uniform_prior(interval, 512), [&](double f) {
      double z1 = (f - mu1) / s1;
      double z2 = (f - mu2) / s2;
      return std::exp(-0.5 * z1 * z1) + a2 * std::exp(-0.5 * z2 * z2);
    });
    double coarse = select_lo_frequency(prior, t_r, 1540.0, candidates, 24);
    double dense = select_lo_frequency(prior, t_r, 1540.0, 10 * candidates, 24);
    double spacing = w / static_cast<double>(candidates - 1);
    if (std::abs(coarse - dense) <= spacing) continue;
    double u_coarse = utility(prior, coarse, t_r, 1540.0, 24);
    double u_dense = utility(prior, dense, t_r, 1540.0, 24);
    worst_sel = std::max(worst_sel, (u_dense - u_coarse) / u_dense);
  }
  bool pass_select = worst_sel <= 0.005;

  report(4, "oracle-equivalence", pass_update && pass_util && pass_select,
         fmt("bayes L1 max %.2e (<1e-6); utility max dev %.2f%% (<1%%); "
             "selection vs dense scan: worst utility shortfall %.3f%% (<0.5%%)",
             worst_l1, 100.0 * worst_util, 100.0 * worst_sel));
}

void criterion_5_posterior_invariants() {
  Scheme scheme = make_scheme(10.0 / 9.0, 1, 40, 85, 0.020, 0.2e-3);
  BfeConfig cfg;  // full spec defaults: 2048 grid, 64 nodes, 128 candidates
  cfg.scheme = scheme;
  cfg.snr_r = 1540.0;
  cfg.seed = 0xC5;
  SignalModel model;
  model.f_c_true_hz = 312.5;
  Rng rng(0x5C);
  EstimationTrace trace = bfe_run_simulated(cfg, model, rng);
  double worst_norm = 0.0;
  bool widths_exact = true;
  for (const EstimationStep& step : trace.steps) {
    worst_norm = std::max(worst_norm, step.norm_error);
    widths_exact = widths_exact && step.interval_width_hz == 1.0 / step.t_r_s;
  }
  bool pass = trace.steps.size() == 85 && worst_norm < 1e-9 && widths_exact;
  report(5, "posterior-invariants", pass,
         fmt("85 iterations, max |integral-1| = %.2e (<1e-9), widths == 1/T_i: %s", worst_norm,
             widths_exact ? "exact" : "VIOLATED"));
}

void criterion_6_schedule_arithmetic() {
  double total = total_time(build_schedule(make_scheme(1.25, 1, 6, 13, 0.020)));
  bool pass_total = std::abs(total - 0.199) < 0.5e-3;
  bool monotone = true;
  double previous = 0.0;
  double limit = 0.020 * 1.25 / 0.25;
  for (int m_b = 5; m_b <= 60; ++m_b) {
    double t = total_time(build_schedule(make_scheme(1.25, 1, 0, m_b, 0.020)));
    monotone = monotone && t > previous && t < limit;
    previous = t;
  }
  bool converged = limit - previous < 1e-5;
  report(6, "schedule-arithmetic", pass_total && monotone && converged,
         fmt("locking total %.4f ms (want 199 +/- 0.5); geometric total -> %.4f ms from below "
             "(limit %.0f ms)",
             1e3 * total, 1e3 * previous, 1e3 * limit));
}

void criterion_7_allan_estimator() {
  FractionalSeries series;
  series.tau0_s = 1.0;
  Rng rng(0xC7);
  series.samples.resize(100000);
  for (double& y : series.samples) y = rng.normal(0.0, 1e-11);
  std::vector<double> taus = {1.0, 2.0, 4.0, 8.0, 16.0};
  auto points = allan_deviation(series, taus);
  std::vector<double> x, y;
  for (const AllanPoint& p : points) {
    x.push_back(p.tau_s);
    y.push_back(p.adev);
  }
  double slope = fit_loglog_slope(x, y, 0, x.size() - 1).slope;
  double coefficient = fit_sqrt_tau_coefficient(points);
  bool pass = std::abs(coefficient / 1e-11 - 1.0) < 0.10 && std::abs(slope + 0.5) < 0.05;
  report(7, "allan-estimator", pass,
         fmt("coefficient %.3e (want 1e-11 +/- 10%%), slope %.3f (want -0.5 +/- 0.05)",
             coefficient, slope));
}

double lock_coefficient(const LockTrace& trace, double nominal) {
  FractionalSeries series{fractional_samples(trace, nominal), trace.cycle_s};
  return fit_sqrt_tau_coefficient(allan_deviation(series, default_taus(series)));
}

void criterion_8_lock_comparison() {
  SignalModel model;
  model.f_c_true_hz = 0.0;
  model.snr_r = 1540.0;
  LoModel lo;  // quantum projection noise only

  // Paired runs: same criterion index drives both locks.
  int pairs = 50;
  std::vector<double> gains_db;
  for (int k = 0; k < pairs; ++k) {
    std::uint64_t ps = Rng::derive_stream(0xC8, static_cast<std::uint64_t>(k));
    Rng pid_rng(Rng::derive_stream(ps, 1));
    LockTrace pid = run_pid_lock(lo, model, 0.020, PidGains{}, 384, pid_rng);
    BfeConfig cfg = mc_config(make_scheme(1.25, 1, 6, 13, 0.020));
    cfg.seed = Rng::derive_stream(ps, 2);
    Rng bfe_rng(Rng::derive_stream(ps, 3));
    LockTrace bfe = run_bfe_lock(lo, model, cfg, 96, bfe_rng);
    gains_db.push_back(
        improvement_db(lock_coefficient(pid, lo.nominal_hz), lock_coefficient(bfe, lo.nominal_hz)));
  }
  double mean_db = 0.0;
  for (double g : gains_db) mean_db += g;
  mean_db /= static_cast<double>(pairs);
  double sem = sample_std(gains_db) / std::sqrt(static_cast<double>(pairs));
  bool pass_pairs = mean_db > 0.0 && mean_db > 2.0 * sem;

  // Coefficient ratios across three schemes track the predicted precisions.
  std::vector<Scheme> schemes = {make_scheme(10.0 / 9.0, 1, 40, 85, 0.020, 0.2e-3),
                                 make_scheme(1.25, 1, 44, 66, 0.020, 0.2e-3),
                                 make_scheme(1.25, 2, 37, 81, 0.020, 0.2e-3)};
  std::vector<double> coeff(schemes.size()), predicted(schemes.size());
  for (std::size_t s = 0; s < schemes.size(); ++s) {
    double sum = 0.0;
    int runs = 3;
    for (int run = 0; run < runs; ++run) {
      BfeConfig cfg = mc_config(schemes[s]);
      cfg.seed = Rng::derive_stream(0xC8C0 + s, static_cast<std::uint64_t>(run));
      Rng rng(Rng::derive_stream(0xC8D0 + s, static_cast<std::uint64_t>(run)));
      LockTrace trace = run_bfe_lock(lo, model, cfg, 96, rng);
      sum += lock_coefficient(trace, lo.nominal_hz);
    }
    coeff[s] = sum / static_cast<double>(runs);
    predicted[s] = predicted_precision(schemes[s], 1540.0);
  }
  double worst_ratio = 0.0;
  for (std::size_t i = 0; i < schemes.size(); ++i) {
    for (std::size_t j = i + 1; j < schemes.size(); ++j) {
      double ratio = (coeff[i] / coeff[j]) / (predicted[i] / predicted[j]);
      worst_ratio = std::max(worst_ratio, std::abs(ratio - 1.0));
    }
  }
  bool pass_ratio = worst_ratio <= 0.25;

  report(8, "lock-comparison", pass_pairs && pass_ratio,
         fmt("improvement %.2f dB +/- %.2f (need >0 at 2 sigma, %d pairs); "
             "sigma proportional to predicted precision: coefficients {%.2e %.2e %.2e} vs "
             "{%.4f %.4f %.4f} Hz, ratios off by %.0f%% max (<=25%%)",
             mean_db, sem, pairs, coeff[0], coeff[1], coeff[2], predicted[0], predicted[1],
             predicted[2], 100.0 * worst_ratio));
}

void criterion_9_db_arithmetic() {
  double db = improvement_db(1.4e-11, 4.3e-12);
  bool pass = std::abs(db - 5.13) <= 0.01;
  report(9, "db-arithmetic", pass, fmt("improvement_db(1.4e-11, 4.3e-12) = %.4f dB", db));
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

bool dirs_identical(const fs::path& a, const fs::path& b) {
  std::vector<fs::path> names;
  for (const auto& entry : fs::directory_iterator(a)) names.push_back(entry.path().filename());
  if (names.empty()) return false;
  for (const auto& name : names) {
    if (!fs::exists(b / name)) return false;
    if (slurp(a / name) != slurp(b / name)) return false;
  }
  return true;
}

void criterion_10_determinism() {
  fs::path root = fs::temp_directory_path() / "bfe_acceptance_determinism";
  fs::remove_all(root);
  fs::create_directories(root);
  auto write_config = [&](const std::string& name, const std::string& text) {
    fs::path path = root / name;
    std::ofstream out(path, std::ios::binary);
    out << text;
    return path.string();
  };
  std::string estimate_cfg = write_config("estimate.ini",
                                          "[scheme]\na = 1.25\ng = 1\nm_tilde = 0\nm_b = 8\n"
                                          "t_max_ms = 20\n[signal]\nr = 1540\n"
                                          "[bfe]\ngrid_size = 256\nquadrature_points = 16\n"
                                          "lo_candidates = 24\n[estimate]\ntrials = 3\n"
                                          "fit_from_iteration = 3\n[run]\nseed = 12\n");
  std::string lock_cfg = write_config("lock.ini",
                                      "[scheme]\na = 1.25\ng = 1\nm_tilde = 6\nm_b = 13\n"
                                      "t_max_ms = 20\n[signal]\nr = 1540\nf_c_true_hz = 0\n"
                                      "[bfe]\ngrid_size = 256\nquadrature_points = 16\n"
                                      "lo_candidates = 24\n[lock]\nmethod = both\ncycles = 32\n"
                                      "t_r_ms = 20\n[run]\nseed = 12\n");
  std::string scaling_cfg = write_config("scaling.ini",
                                         "[scaling]\nschemes_tmax_ms = 1.25:1:0:8:20\n"
                                         "trials = 2\nfit_from_iteration = 3\n[signal]\n"
                                         "r = 1540\n[bfe]\ngrid_size = 256\n"
                                         "quadrature_points = 16\nlo_candidates = 24\n"
                                         "[run]\nseed = 12\n");
  std::string analyze_cfg = write_config("analyze.ini", "[analyze]\nnominal_hz = 6.835e9\n");

  bool pass = true;
  std::string detail;
  auto check_cmd = [&](const std::string& label, const std::function<void(CliOptions&)>& set,
                       const std::string& config) {
    for (const char* tag : {"x", "y"}) {
      CliOptions options;
      options.config_path = config;
      options.out_dir = (root / (label + "_" + tag)).string();
      set(options);
      if (label == "estimate") cmd_estimate(options);
      if (label == "lock") cmd_lock(options);
      if (label == "scaling") cmd_scaling(options);
      if (label == "analyze") cmd_analyze(options);
    }
    bool same = dirs_identical(root / (label + "_x"), root / (label + "_y"));
    pass = pass && same;
    detail += label + (same ? " ok; " : " DIFFERS; ");
  };
  check_cmd("estimate", [](CliOptions&) {}, estimate_cfg);
  check_cmd("lock", [](CliOptions&) {}, lock_cfg);
  check_cmd("scaling", [](CliOptions&) {}, scaling_cfg);
  check_cmd(
      "analyze",
      [&](CliOptions& options) {
        options.inputs = {(root / "lock_x" / "lock_bfe_trace.csv").string()};
      },
      analyze_cfg);
  report(10, "determinism", pass, detail + "byte-identical reruns");
}

}  // namespace

int main() {
  auto start = std::chrono::steady_clock::now();
  criterion_1_heisenberg_scaling();
  criterion_2_analytic_precision();
  criterion_3_plateau_crossover();
  criterion_4_oracle_equivalence();
  criterion_5_posterior_invariants();
  criterion_6_schedule_arithmetic();
  criterion_7_allan_estimator();
  criterion_8_lock_comparison();
  criterion_9_db_arithmetic();
  criterion_10_determinism();
  double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d/10 criteria passed in %.0f s\n", 10 - g_failures, elapsed);
  return g_failures == 0 ? 0 : 1;
}

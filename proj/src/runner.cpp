#include "bfe/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "bfe/adaptive.hpp"
#include "bfe/analysis.hpp"
#include "bfe/config.hpp"
#include "bfe/errors.hpp"
#include "bfe/locking.hpp"
#include "bfe/rng.hpp"

namespace bfe {

namespace {

namespace fs = std::filesystem;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

using Cell = std::variant<double, long long, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

// One row per iteration/cycle; floats carry 17 significant digits so a rerun
// with the same config and seed is byte-identical.
void write_table(const Table& table, const fs::path& path_no_ext, const std::string& format) {
  if (format == "csv") {
    std::ofstream out(path_no_ext.string() + ".csv", std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path_no_ext.string() + ".csv");
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      out << (c ? "," : "") << table.columns[c];
    }
    out << "\n";
    for (const auto& row : table.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) out << ",";
        if (std::holds_alternative<double>(row[c])) {
          out << fmt(std::get<double>(row[c]));
        } else if (std::holds_alternative<long long>(row[c])) {
          out << std::get<long long>(row[c]);
        } else {
          out << std::get<std::string>(row[c]);
        }
      }
      out << "\n";
    }
    return;
  }
  if (format == "json") {
    nlohmann::json doc;
    doc["columns"] = table.columns;
    auto rows = nlohmann::json::array();
    for (const auto& row : table.rows) {
      auto jrow = nlohmann::json::array();
      for (const auto& cell : row) {
        if (std::holds_alternative<double>(cell)) {
          jrow.push_back(std::get<double>(cell));
        } else if (std::holds_alternative<long long>(cell)) {
          jrow.push_back(std::get<long long>(cell));
        } else {
          jrow.push_back(std::get<std::string>(cell));
        }
      }
      rows.push_back(std::move(jrow));
    }
    doc["rows"] = std::move(rows);
    std::ofstream out(path_no_ext.string() + ".json", std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path_no_ext.string() + ".json");
    out << doc.dump(1) << "\n";
    return;
  }
  throw ConfigError("unknown output format '" + format + "' (expected csv or json)");
}

struct RunSettings {
  std::uint64_t seed = 0;
  std::string out_dir = "out";
  std::string format = "csv";
  int jobs = 1;
};

RunSettings run_settings(const ConfigDoc& doc, const CliOptions& options) {
  RunSettings s;
  s.seed = static_cast<std::uint64_t>(doc.get_int("run", "seed", 0));
  s.out_dir = doc.get_string("run", "out_dir", "out");
  s.format = doc.get_string("run", "format", "csv");
  s.jobs = static_cast<int>(doc.get_int("run", "jobs", 1));
  if (options.seed) s.seed = *options.seed;
  if (options.out_dir) s.out_dir = *options.out_dir;
  if (options.format) s.format = *options.format;
  if (options.jobs) s.jobs = *options.jobs;
  if (s.format != "csv" && s.format != "json") {
    throw ConfigError("format must be csv or json, got '" + s.format + "'");
  }
  if (s.jobs < 1) throw ConfigError("jobs must be at least 1");
  fs::create_directories(s.out_dir);
  return s;
}

BfeConfig bfe_config_from(const ConfigDoc& doc, const Scheme& scheme, const SignalModel& signal) {
  BfeConfig cfg;
  cfg.scheme = scheme;
  cfg.snr_r = signal.snr_r;
  cfg.grid_size = static_cast<std::size_t>(doc.get_int("bfe", "grid_size", 2048));
  cfg.utility_quadrature_points = static_cast<int>(doc.get_int("bfe", "quadrature_points", 64));
  cfg.lo_candidate_count = static_cast<int>(doc.get_int("bfe", "lo_candidates", 128));
  cfg.enhancement_enabled = doc.get_bool("bfe", "enhancement", true);
  cfg.literal_enhancement_trigger = doc.get_bool("bfe", "literal_enhancement", false);
  cfg.initial_center_hz = doc.get_double("bfe", "initial_center_hz", 0.0);
  std::string selection = doc.get_string("bfe", "selection", "utility");
  if (selection == "utility") {
    cfg.selection = LoSelection::utility_argmax;
  } else if (selection == "mid_fringe") {
    cfg.selection = LoSelection::mid_fringe;
  } else {
    throw ConfigError("[bfe] selection: expected utility or mid_fringe, got '" + selection + "'");
  }
  if (doc.get_bool("bfe", "compensate_shift", true) && signal.shift_model) {
    cfg.shift_model = signal.shift_model;
  }
  cfg.validate();
  return cfg;
}

// Strided fan-out over trials; results land in caller-owned storage indexed
// by trial, so the output order never depends on scheduling.
void parallel_trials(int trials, int jobs, const std::function<void(int)>& body) {
  if (jobs <= 1 || trials <= 1) {
    for (int t = 0; t < trials; ++t) body(t);
    return;
  }
  int workers = std::min(jobs, trials);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (int t = w; t < trials; t += workers) body(t);
    });
  }
  for (auto& th : pool) th.join();
}

struct TrialResult {
  EstimationTrace trace;
  double f_c_true_hz = 0.0;
};

// Ground truth for trial k: fixed when configured, otherwise drawn uniformly
// from the middle half of the initial interval.
double trial_ground_truth(bool fixed, double fixed_value, const FrequencyInterval& interval,
                          std::uint64_t trial_seed) {
  if (fixed) return fixed_value;
  Rng rng(Rng::derive_stream(trial_seed, 3));
  return rng.uniform(interval.center() - 0.25 * interval.width(),
                     interval.center() + 0.25 * interval.width());
}

std::vector<TrialResult> run_trials(const BfeConfig& base_config, const SignalModel& base_signal,
                                    bool fixed_truth, int trials, std::uint64_t master_seed,
                                    int jobs) {
  Schedule schedule = build_schedule(base_config.scheme);
  FrequencyInterval interval =
      base_config.initial_interval
          ? *base_config.initial_interval
          : FrequencyInterval::centered(base_config.initial_center_hz,
                                        1.0 / schedule.times_s.front());
  std::vector<TrialResult> results(static_cast<std::size_t>(trials));
  parallel_trials(trials, jobs, [&](int t) {
    std::uint64_t trial_seed = Rng::derive_stream(master_seed, static_cast<std::uint64_t>(t));
    SignalModel model = base_signal;
    model.f_c_true_hz =
        trial_ground_truth(fixed_truth, base_signal.f_c_true_hz, interval, trial_seed);
    BfeConfig cfg = base_config;
    cfg.seed = Rng::derive_stream(trial_seed, 2);
    Rng measurement_rng(Rng::derive_stream(trial_seed, 1));
    results[static_cast<std::size_t>(t)] = {bfe_run_simulated(cfg, model, measurement_rng),
                                            model.f_c_true_hz};
  });
  return results;
}

Table trace_table(const EstimationTrace& trace) {
  Table t;
  t.columns = {"iteration",         "t_r_s",     "lo_selected_hz", "lo_freq_hz",
               "shift_hz",          "p_e",       "f_est_hz",       "df_est_hz",
               "cumulative_time_s", "interval_width_hz", "norm_error", "degenerate"};
  for (const EstimationStep& s : trace.steps) {
    t.add_row({static_cast<long long>(s.index), s.t_r_s, s.lo_selected_hz, s.lo_freq_hz,
               s.shift_hz, s.p_e, s.f_est_hz, s.df_est_hz, s.cumulative_time_s,
               s.interval_width_hz, s.norm_error, static_cast<long long>(s.degenerate ? 1 : 0)});
  }
  return t;
}

// Sample standard deviation of the estimation error per iteration, across trials.
std::vector<double> sample_std_curve(const std::vector<TrialResult>& results) {
  std::size_t steps = results.front().trace.steps.size();
  std::vector<double> out(steps, 0.0);
  for (std::size_t j = 0; j < steps; ++j) {
    double sum = 0.0, sum2 = 0.0;
    for (const TrialResult& r : results) {
      double e = r.trace.steps[j].f_est_hz - r.f_c_true_hz;
      sum += e;
      sum2 += e * e;
    }
    double n = static_cast<double>(results.size());
    double var = (sum2 - sum * sum / n) / (n - 1.0);
    out[j] = std::sqrt(std::max(var, 0.0));
  }
  return out;
}

Table aggregate_table(const std::vector<TrialResult>& results, const Schedule& schedule,
                      double snr_r) {
  Table t;
  t.columns = {"iteration", "cumulative_time_s", "sample_std_hz", "analytic_std_hz",
               "mean_df_est_hz"};
  std::vector<double> stds = sample_std_curve(results);
  std::vector<double> analytic = fisher_limit_curve(schedule, snr_r);
  for (std::size_t j = 0; j < stds.size(); ++j) {
    double mean_df = 0.0;
    for (const TrialResult& r : results) mean_df += r.trace.steps[j].df_est_hz;
    mean_df /= static_cast<double>(results.size());
    t.add_row({static_cast<long long>(j + 1), results.front().trace.steps[j].cumulative_time_s,
               stds[j], analytic[j], mean_df});
  }
  return t;
}

struct SlopeFit {
  double slope = std::nan("");
  double residual = std::nan("");
};

// Log-log slope of std vs cumulative time over 1-based iterations [from, to].
SlopeFit fit_window(const std::vector<TrialResult>& results, int from, int to) {
  SlopeFit out;
  if (results.empty()) return out;
  const auto& steps = results.front().trace.steps;
  to = std::min(to, static_cast<int>(steps.size()));
  if (from < 1 || to - from + 1 < 3) return out;
  std::vector<double> x, y;
  std::vector<double> stds = sample_std_curve(results);
  for (int j = from; j <= to; ++j) {
    double s = stds[static_cast<std::size_t>(j - 1)];
    if (!(s > 0.0)) return out;
    x.push_back(steps[static_cast<std::size_t>(j - 1)].cumulative_time_s);
    y.push_back(s);
  }
  LogLogFit fit = fit_loglog_slope(x, y, 0, x.size() - 1);
  out.slope = fit.slope;
  out.residual = fit.rms_residual;
  return out;
}

Table allan_table(const std::vector<AllanPoint>& points) {
  Table t;
  t.columns = {"tau_s", "adev", "adev_err_1sigma", "valid", "note"};
  for (const AllanPoint& p : points) {
    t.add_row({p.tau_s, p.adev, p.adev_err, static_cast<long long>(p.valid ? 1 : 0), p.error});
  }
  return t;
}

Table lock_trace_table(const LockTrace& trace) {
  Table t;
  t.columns = {"cycle", "time_s", "delta_nu_hz", "correction_hz"};
  for (const LockCycle& c : trace.cycles) {
    t.add_row({static_cast<long long>(c.index), c.time_s, c.delta_nu_hz, c.correction_hz});
  }
  return t;
}

struct LockStability {
  std::vector<AllanPoint> allan;
  double coefficient_1s = std::nan("");
  double slope = std::nan("");
  double residual = std::nan("");
};

LockStability lock_stability(const LockTrace& trace, double nominal_hz, double tau0_s) {
  LockStability out;
  if (trace.cycles.size() < 4) return out;
  FractionalSeries series{fractional_samples(trace, nominal_hz), tau0_s};
  out.allan = allan_deviation(series, default_taus(series));
  std::vector<double> x, y;
  for (const AllanPoint& p : out.allan) {
    if (p.valid && p.adev > 0.0) {
      x.push_back(p.tau_s);
      y.push_back(p.adev);
    }
  }
  if (x.size() >= 3) {
    LogLogFit fit = fit_loglog_slope(x, y, 0, x.size() - 1);
    out.slope = fit.slope;
    out.residual = fit.rms_residual;
    out.coefficient_1s = fit_sqrt_tau_coefficient(out.allan);
  }
  return out;
}

}  // namespace

void cmd_estimate(const CliOptions& options) {
  ConfigDoc doc = ConfigDoc::parse_file(options.config_path);
  Scheme scheme = scheme_from_config(doc);
  SignalModel signal = signal_from_config(doc);
  bool fixed_truth = doc.has("signal", "f_c_true_hz");
  BfeConfig cfg = bfe_config_from(doc, scheme, signal);
  int trials = static_cast<int>(doc.get_int("estimate", "trials", 100));
  int fit_from = static_cast<int>(doc.get_int("estimate", "fit_from_iteration", 5));
  RunSettings run = run_settings(doc, options);
  if (options.trials) trials = *options.trials;
  doc.reject_unused();
  if (trials < 1) throw ConfigError("[estimate] trials must be at least 1");

  auto results = run_trials(cfg, signal, fixed_truth, trials, run.seed, run.jobs);
  Schedule schedule = build_schedule(scheme);

  fs::path dir(run.out_dir);
  for (int t = 0; t < trials; ++t) {
    char name[48];
    std::snprintf(name, sizeof name, "estimate_trial_%05d", t);
    write_table(trace_table(results[static_cast<std::size_t>(t)].trace), dir / name, run.format);
  }
  write_table(aggregate_table(results, schedule, signal.snr_r), dir / "estimate_aggregate",
              run.format);

  SlopeFit ramp = fit_window(results, fit_from, scheme.ramp_end());
  std::vector<double> stds = sample_std_curve(results);
  Table summary;
  summary.columns = {"a",     "g",          "m_tilde",        "m_b",
                     "t_max_s", "r",        "trials",         "seed",
                     "predicted_precision_hz", "final_sample_std_hz", "ramp_slope",
                     "ramp_slope_residual", "clamped_entries", "ramp_misaligned"};
  summary.add_row({scheme.growth_ratio, static_cast<long long>(scheme.steps_per_growth),
                   static_cast<long long>(scheme.plateau_steps),
                   static_cast<long long>(scheme.iterations), scheme.t_max_s, signal.snr_r,
                   static_cast<long long>(trials), static_cast<long long>(run.seed),
                   predicted_precision(scheme, signal.snr_r), stds.back(), ramp.slope,
                   ramp.residual, static_cast<long long>(schedule.clamped_indices.size()),
                   static_cast<long long>(schedule.ramp_misaligned ? 1 : 0)});
  write_table(summary, dir / "estimate_summary", run.format);
}

void cmd_lock(const CliOptions& options) {
  ConfigDoc doc = ConfigDoc::parse_file(options.config_path);
  std::string method = doc.get_string("lock", "method", "both");
  if (method != "pid" && method != "bfe" && method != "both") {
    throw ConfigError("[lock] method: expected pid, bfe or both, got '" + method + "'");
  }
  SignalModel signal = signal_from_config(doc);
  LoModel lo = lo_from_config(doc);
  int cycles = static_cast<int>(doc.get_int("lock", "cycles"));
  double t_r_s = doc.get_double("lock", "t_r_ms", 20.0) * 1e-3;
  PidGains gains;
  gains.kp = doc.get_double("lock", "kp", 0.5);
  gains.ki = doc.get_double("lock", "ki", 0.1);
  gains.kd = doc.get_double("lock", "kd", 0.0);
  bool include_dead = doc.get_bool("lock", "include_dead_time", false);

  bool want_bfe = method != "pid";
  Scheme scheme;
  BfeConfig cfg;
  if (want_bfe) {
    scheme = scheme_from_config(doc);
    cfg = bfe_config_from(doc, scheme, signal);
  }
  RunSettings run = run_settings(doc, options);
  doc.reject_unused();
  if (cycles < 0) throw ConfigError("[lock] cycles must be non-negative");

  fs::path dir(run.out_dir);
  Table summary;
  summary.columns = {"method", "cycles", "cycle_s", "tau0_s", "coefficient_1s_fractional",
                     "allan_slope", "allan_fit_residual"};
  double pid_coeff = std::nan("");
  double bfe_coeff = std::nan("");

  if (method != "bfe") {
    Rng rng(Rng::derive_stream(run.seed, 0xA1));
    LockTrace trace = run_pid_lock(lo, signal, t_r_s, gains, cycles, rng);
    double tau0 = trace.cycle_s + (include_dead ? 2.0 * default_dead_time_s() : 0.0);
    write_table(lock_trace_table(trace), dir / "lock_pid_trace", run.format);
    LockStability st = lock_stability(trace, lo.nominal_hz, tau0);
    write_table(allan_table(st.allan), dir / "lock_pid_allan", run.format);
    summary.add_row({std::string("pid"), static_cast<long long>(cycles), trace.cycle_s, tau0,
                     st.coefficient_1s, st.slope, st.residual});
    pid_coeff = st.coefficient_1s;
  }
  if (want_bfe) {
    Rng rng(Rng::derive_stream(run.seed, 0xB2));
    LockTrace trace = run_bfe_lock(lo, signal, cfg, cycles, rng);
    double tau0 = trace.cycle_s + (include_dead
                                       ? static_cast<double>(scheme.iterations) *
                                             default_dead_time_s()
                                       : 0.0);
    write_table(lock_trace_table(trace), dir / "lock_bfe_trace", run.format);
    LockStability st = lock_stability(trace, lo.nominal_hz, tau0);
    write_table(allan_table(st.allan), dir / "lock_bfe_allan", run.format);
    summary.add_row({std::string("bfe"), static_cast<long long>(cycles), trace.cycle_s, tau0,
                     st.coefficient_1s, st.slope, st.residual});
    bfe_coeff = st.coefficient_1s;
  }
  write_table(summary, dir / "lock_summary", run.format);

  if (method == "both" && pid_coeff > 0.0 && bfe_coeff > 0.0) {
    Table cmp;
    cmp.columns = {"pid_coefficient_1s", "bfe_coefficient_1s", "improvement_db"};
    cmp.add_row({pid_coeff, bfe_coeff, improvement_db(pid_coeff, bfe_coeff)});
    write_table(cmp, dir / "lock_comparison", run.format);
  }
}

void cmd_scaling(const CliOptions& options) {
  ConfigDoc doc = ConfigDoc::parse_file(options.config_path);
  std::string tuples = doc.get_string("scaling", "schemes_tmax_ms");
  SignalModel signal = signal_from_config(doc);
  bool fixed_truth = doc.has("signal", "f_c_true_hz");
  int trials = static_cast<int>(doc.get_int("scaling", "trials", 100));
  int fit_from = static_cast<int>(doc.get_int("scaling", "fit_from_iteration", 5));
  int plateau_skip = static_cast<int>(doc.get_int("scaling", "plateau_fit_skip", 5));
  RunSettings run = run_settings(doc, options);
  if (options.trials) trials = *options.trials;

  std::vector<Scheme> schemes;
  std::istringstream list(tuples);
  std::string item;
  while (std::getline(list, item, ',')) {
    auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    auto last = item.find_last_not_of(" \t");
    schemes.push_back(scheme_from_tuple(item.substr(first, last - first + 1)));
  }
  if (schemes.empty()) throw ConfigError("[scaling] schemes_tmax_ms: no schemes given");

  // The scaling sweep shares the engine knobs; default section values apply
  // when [bfe] is absent.
  std::vector<BfeConfig> configs;
  for (const Scheme& s : schemes) configs.push_back(bfe_config_from(doc, s, signal));
  doc.reject_unused();
  if (trials < 1) throw ConfigError("[scaling] trials must be at least 1");

  fs::path dir(run.out_dir);
  Table summary;
  summary.columns = {"scheme",      "a",          "g",           "m_tilde",
                     "m_b",         "t_max_s",    "total_time_s", "trials",
                     "predicted_precision_hz",    "final_sample_std_hz",
                     "ramp_slope",  "ramp_residual", "plateau_slope", "plateau_residual",
                     "clamped_entries", "ramp_misaligned"};
  for (std::size_t k = 0; k < schemes.size(); ++k) {
    const Scheme& scheme = schemes[k];
    std::uint64_t scheme_seed = Rng::derive_stream(run.seed, 0xC0DE + k);
    auto results = run_trials(configs[k], signal, fixed_truth, trials, scheme_seed, run.jobs);
    Schedule schedule = build_schedule(scheme);
    char name[64];
    std::snprintf(name, sizeof name, "scaling_scheme_%zu", k);
    write_table(aggregate_table(results, schedule, signal.snr_r), dir / name, run.format);

    SlopeFit ramp = fit_window(results, fit_from, scheme.ramp_end());
    SlopeFit plateau;
    if (scheme.plateau_steps > 0) {
      plateau = fit_window(results, scheme.ramp_end() + plateau_skip, scheme.iterations);
    }
    std::vector<double> stds = sample_std_curve(results);
    summary.add_row({static_cast<long long>(k), scheme.growth_ratio,
                     static_cast<long long>(scheme.steps_per_growth),
                     static_cast<long long>(scheme.plateau_steps),
                     static_cast<long long>(scheme.iterations), scheme.t_max_s,
                     total_time(schedule), static_cast<long long>(trials),
                     predicted_precision(scheme, signal.snr_r), stds.back(), ramp.slope,
                     ramp.residual, plateau.slope, plateau.residual,
                     static_cast<long long>(schedule.clamped_indices.size()),
                     static_cast<long long>(schedule.ramp_misaligned ? 1 : 0)});
  }
  write_table(summary, dir / "scaling_summary", run.format);
}

namespace {

struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

CsvTable read_numeric_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open trace file: " + path);
  CsvTable table;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::istringstream row(line);
    std::string cell;
    while (std::getline(row, cell, ',')) cells.push_back(cell);
    if (line_no == 1) {
      table.columns = cells;
      continue;
    }
    if (cells.size() != table.columns.size()) {
      throw ConfigError(path + ":" + std::to_string(line_no) + ": expected " +
                        std::to_string(table.columns.size()) + " columns, got " +
                        std::to_string(cells.size()));
    }
    std::vector<double> values;
    values.reserve(cells.size());
    for (const std::string& c : cells) {
      try {
        std::size_t pos = 0;
        values.push_back(std::stod(c, &pos));
        if (pos != c.size()) throw std::invalid_argument(c);
      } catch (const std::exception&) {
        throw ConfigError(path + ":" + std::to_string(line_no) + ": not a number: '" + c + "'");
      }
    }
    table.rows.push_back(std::move(values));
  }
  if (table.columns.empty()) throw ConfigError(path + ":1: missing header row");
  return table;
}

std::size_t column_index(const CsvTable& table, const std::string& name, const std::string& path) {
  auto it = std::find(table.columns.begin(), table.columns.end(), name);
  if (it == table.columns.end()) {
    throw ConfigError(path + ":1: required column '" + name + "' not found");
  }
  return static_cast<std::size_t>(it - table.columns.begin());
}

}  // namespace

void cmd_analyze(const CliOptions& options) {
  ConfigDoc doc = ConfigDoc::parse_file(options.config_path);
  std::string configured = doc.get_string("analyze", "inputs", "");
  std::vector<std::string> inputs = options.inputs;  // positional args shadow the config
  if (inputs.empty()) {
    std::istringstream stream(configured);
    std::string item;
    while (std::getline(stream, item, ',')) {
      auto first = item.find_first_not_of(" \t");
      if (first == std::string::npos) continue;
      auto last = item.find_last_not_of(" \t");
      inputs.push_back(item.substr(first, last - first + 1));
    }
  }
  double nominal = doc.get_double("analyze", "nominal_hz", 6.835e9);
  RunSettings run = run_settings(doc, options);
  doc.reject_unused();
  if (inputs.empty()) throw ConfigError("[analyze] inputs: no trace files given");

  fs::path dir(run.out_dir);
  Table summary;
  summary.columns = {"input", "samples", "tau0_s", "coefficient_1s_fractional", "allan_slope",
                     "allan_fit_residual"};
  for (const std::string& input : inputs) {
    CsvTable table = read_numeric_csv(input);
    std::size_t time_col = column_index(table, "time_s", input);
    std::size_t value_col = column_index(table, "delta_nu_hz", input);
    if (table.rows.size() < 4) {
      throw ConfigError(input + ": at least 4 cycles required for Allan analysis, got " +
                        std::to_string(table.rows.size()));
    }
    double tau0 = table.rows[1][time_col] - table.rows[0][time_col];
    if (!(tau0 > 0.0)) throw ConfigError(input + ":3: time column must be increasing");
    FractionalSeries series;
    series.tau0_s = tau0;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
      if (r + 1 < table.rows.size()) {
        double dt = table.rows[r + 1][time_col] - table.rows[r][time_col];
        if (std::abs(dt - tau0) > 1e-6 * tau0) {
          throw ConfigError(input + ":" + std::to_string(r + 3) +
                            ": cycle duration is not uniform");
        }
      }
      series.samples.push_back(table.rows[r][value_col] / nominal);
    }
    auto points = allan_deviation(series, default_taus(series));
    fs::path stem = fs::path(input).stem();
    write_table(allan_table(points), dir / (stem.string() + "_allan"), run.format);

    double coeff = std::nan("");
    double slope = std::nan("");
    double residual = std::nan("");
    std::vector<double> x, y;
    for (const AllanPoint& p : points) {
      if (p.valid && p.adev > 0.0) {
        x.push_back(p.tau_s);
        y.push_back(p.adev);
      }
    }
    if (x.size() >= 3) {
      LogLogFit fit = fit_loglog_slope(x, y, 0, x.size() - 1);
      slope = fit.slope;
      residual = fit.rms_residual;
      coeff = fit_sqrt_tau_coefficient(points);
    } else if (!points.empty()) {
      coeff = 0.0;  // constant trace: all-zero deviation
    }
    summary.add_row({fs::path(input).filename().string(),
                     static_cast<long long>(series.samples.size()), tau0, coeff, slope, residual});
  }
  write_table(summary, dir / "analyze_summary", run.format);
}

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"Bayesian frequency estimation and clock-locking simulator"};
  app.require_subcommand(1);

  CliOptions options;
  std::uint64_t seed_value = 0;
  int trials_value = 0;
  std::string out_value;
  std::string format_value;
  int jobs_value = 0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", options.config_path, "configuration file")->required();
    cmd->add_option("--seed", seed_value, "override [run] seed");
    cmd->add_option("--trials", trials_value, "override trial count");
    cmd->add_option("--out", out_value, "output directory");
    cmd->add_option("--format", format_value, "output format: csv or json");
    cmd->add_option("--jobs", jobs_value, "worker threads for independent trials");
  };
  auto collect_overrides = [&](CLI::App* cmd) {
    if (cmd->count("--seed")) options.seed = seed_value;
    if (cmd->count("--trials")) options.trials = trials_value;
    if (cmd->count("--out")) options.out_dir = out_value;
    if (cmd->count("--format")) options.format = format_value;
    if (cmd->count("--jobs")) options.jobs = jobs_value;
  };

  auto* estimate = app.add_subcommand("estimate", "run adaptive frequency estimation trials");
  add_common(estimate);
  auto* lock = app.add_subcommand("lock", "closed-loop locking comparison");
  add_common(lock);
  auto* scaling = app.add_subcommand("scaling", "precision-vs-time scaling sweep");
  add_common(scaling);
  auto* analyze = app.add_subcommand("analyze", "Allan analysis of lock traces");
  add_common(analyze);
  analyze->add_option("inputs", options.inputs, "trace files (overrides [analyze] inputs)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      std::cout << app.help() << std::flush;
      return 0;
    }
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  for (CLI::App* cmd : {estimate, lock, scaling, analyze}) {
    if (cmd->parsed()) collect_overrides(cmd);
  }

  try {
    if (estimate->parsed()) {
      cmd_estimate(options);
    } else if (lock->parsed()) {
      cmd_lock(options);
    } else if (scaling->parsed()) {
      cmd_scaling(options);
    } else if (analyze->parsed()) {
      cmd_analyze(options);
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

}  // namespace bfe

#include "bfe/locking.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "bfe/errors.hpp"

namespace bfe {

void LoModel::validate() const {
  if (white_fm_sigma_1s < 0.0) throw ConfigError("LO model: white-FM sigma must be >= 0");
  if (!(nominal_hz > 0.0)) throw ConfigError("LO model: nominal frequency must be positive");
}

LoModel lo_evolve(const LoModel& lo, double dt_s, Rng& rng) {
  if (!(dt_s > 0.0)) throw std::invalid_argument("lo_evolve: dt must be positive");
  LoModel out = lo;
  double base = lo.offset_hz - lo.white_offset_hz + lo.drift_hz_per_s * dt_s;
  out.white_offset_hz = 0.0;
  if (lo.white_fm_sigma_1s > 0.0) {
    // The mean fractional frequency of white FM over a window dt has std
    // σ₁/√dt and is independent of every other window, so the white part is
    // redrawn rather than accumulated.
    double sigma = lo.nominal_hz * lo.white_fm_sigma_1s / std::sqrt(dt_s);
    out.white_offset_hz = rng.normal(0.0, sigma);
  }
  out.offset_hz = base + out.white_offset_hz;
  return out;
}

double pid_error(double s_plus, double s_minus, double t_r_s, double amplitude) {
  if (!(t_r_s > 0.0)) throw std::invalid_argument("pid_error: T_R must be positive");
  if (!(amplitude > 0.0)) throw std::invalid_argument("pid_error: amplitude must be positive");
  return (s_plus - s_minus) / (4.0 * t_r_s * amplitude);
}

LockTrace run_pid_lock(const LoModel& lo_init, const SignalModel& model, double t_r_s,
                       const PidGains& gains, int cycles, Rng& rng) {
  if (!(t_r_s > 0.0)) throw std::invalid_argument("run_pid_lock: T_R must be positive");
  if (cycles < 0) throw std::invalid_argument("run_pid_lock: cycle count must be >= 0");
  lo_init.validate();
  model.validate();

  LockTrace trace;
  trace.method = "pid";
  trace.cycle_s = 2.0 * t_r_s;  // two fringe measurements per feedback cycle
  trace.cycles.reserve(static_cast<std::size_t>(cycles));

  LoModel lo = lo_init;
  double setpoint = 0.0;
  double amplitude = 0.5 * model.contrast;
  double quarter = 0.25 / t_r_s;
  double integral = 0.0;
  double prev_error = 0.0;
  for (int j = 1; j <= cycles; ++j) {
    double s_plus = simulate_measurement(model, setpoint + quarter + lo.offset_hz, t_r_s, rng);
    double s_minus = simulate_measurement(model, setpoint - quarter + lo.offset_hz, t_r_s, rng);
    double error = pid_error(s_plus, s_minus, t_r_s, amplitude);
    integral += error;
    double correction = gains.kp * error + gains.ki * integral + gains.kd * (error - prev_error);
    prev_error = error;
    setpoint += correction;

    LockCycle cycle;
    cycle.index = j;
    cycle.time_s = static_cast<double>(j) * trace.cycle_s;
    cycle.delta_nu_hz = setpoint + lo.offset_hz - model.f_c_true_hz;
    cycle.correction_hz = correction;
    trace.cycles.push_back(cycle);

    lo = lo_evolve(lo, trace.cycle_s, rng);
  }
  return trace;
}

LockTrace run_bfe_lock(const LoModel& lo_init, const SignalModel& model, const BfeConfig& config,
                       int cycles, Rng& rng) {
  if (cycles < 0) throw std::invalid_argument("run_bfe_lock: cycle count must be >= 0");
  lo_init.validate();
  model.validate();
  config.validate();

  LockTrace trace;
  trace.method = "bfe";
  Schedule schedule = build_schedule(config.scheme);
  trace.cycle_s = total_time(schedule);
  trace.cycles.reserve(static_cast<std::size_t>(cycles));

  LoModel lo = lo_init;
  double setpoint = 0.0;
  double f_est_prev = 0.0;
  for (int j = 1; j <= cycles; ++j) {
    BfeConfig cycle_config = config;
    cycle_config.initial_interval.reset();
    cycle_config.initial_center_hz = setpoint;
    cycle_config.seed = Rng::derive_stream(config.seed, static_cast<std::uint64_t>(j));
    // No feedback until the full estimation pass completes.
    EstimationTrace est = bfe_run(cycle_config, [&](double f_hz, double t_r) {
      return simulate_measurement(model, f_hz + lo.offset_hz, t_r, rng);
    });

    double f_est = est.final_f_est_hz;
    double correction = f_est - f_est_prev;
    f_est_prev = f_est;
    setpoint = f_est;

    LockCycle cycle;
    cycle.index = j;
    cycle.time_s = static_cast<double>(j) * trace.cycle_s;
    cycle.delta_nu_hz = setpoint + lo.offset_hz - model.f_c_true_hz;
    cycle.correction_hz = correction;
    trace.cycles.push_back(cycle);

    lo = lo_evolve(lo, trace.cycle_s, rng);
  }
  return trace;
}

double default_dead_time_s() {
  // 100 ms trap loading + 5 ms molasses + 400 us preparation + 50 us detection,
  // per measurement.
  return 0.105 + 400e-6 + 50e-6;
}

std::vector<double> fractional_samples(const LockTrace& trace, double nominal_hz) {
  if (!(nominal_hz > 0.0)) {
    throw std::invalid_argument("fractional_samples: nominal frequency must be positive");
  }
  std::vector<double> out;
  out.reserve(trace.cycles.size());
  for (const LockCycle& c : trace.cycles) out.push_back(c.delta_nu_hz / nominal_hz);
  return out;
}

}  // namespace bfe

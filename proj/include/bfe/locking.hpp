#pragma once

#include <string>
#include <vector>

#include "bfe/adaptive.hpp"
#include "bfe/rng.hpp"
#include "bfe/schedule.hpp"
#include "bfe/signal.hpp"

namespace bfe {

/// Local-oscillator noise model: white frequency noise plus linear drift on
/// top of a deterministic offset from the clock transition. The white part is
/// redrawn every evolution step with std nominal·sigma/√dt, which makes a
/// free-running sampled trace reproduce σ_y(τ) = white_fm_sigma_1s/√τ.
struct LoModel {
  double offset_hz = 0.0;           // current true detuning from f_c
  double white_fm_sigma_1s = 0.0;   // fractional frequency deviation at 1 s
  double drift_hz_per_s = 0.0;
  double nominal_hz = 6.835e9;      // carrier, for fractional <-> absolute conversion
  double white_offset_hz = 0.0;     // stochastic component of offset_hz (bookkeeping)

  void validate() const;
};

/// Advance the LO by dt: drift accumulates, the white-FM component is freshly
/// drawn for the new interval.
LoModel lo_evolve(const LoModel& lo, double dt_s, Rng& rng);

/// Error signal of the two-point lock, (s_plus - s_minus)/(4·T_R·P) in Hz,
/// from measurements at the bilateral half-maximum points f ± 1/(4T_R).
double pid_error(double s_plus, double s_minus, double t_r_s, double amplitude);

struct PidGains {
  double kp = 0.5;
  double ki = 0.1;
  double kd = 0.0;
};

/// One feedback cycle of a closed-loop locking run.
struct LockCycle {
  int index = 0;             // j, 1-based
  double time_s = 0.0;       // end of cycle, dead time excluded
  double delta_nu_hz = 0.0;  // frequency fluctuation δν_j
  double correction_hz = 0.0;
};

struct LockTrace {
  std::vector<LockCycle> cycles;
  double cycle_s = 0.0;  // uniform feedback-cycle duration (interrogation only)
  std::string method;
};

/// Conventional lock: each cycle measures the fringe at f ± 1/(4T_R), forms
/// the error signal, and applies a PID correction to the LO estimate.
LockTrace run_pid_lock(const LoModel& lo, const SignalModel& model, double t_r_s,
                       const PidGains& gains, int cycles, Rng& rng);

/// Adaptive lock: each cycle runs a full estimation pass (M_b measurements,
/// no mid-run feedback) and applies Δν_j = f_est^j - f_est^{j-1} in full.
LockTrace run_bfe_lock(const LoModel& lo, const SignalModel& model, const BfeConfig& config,
                       int cycles, Rng& rng);

/// Dead time per measurement when re-included in the cycle time: atom loading
/// plus state preparation and detection pulses.
double default_dead_time_s();

/// Convert a lock trace to fractional-frequency samples (δν/ν₀).
std::vector<double> fractional_samples(const LockTrace& trace, double nominal_hz);

}  // namespace bfe

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "bfe/posterior.hpp"
#include "bfe/rng.hpp"
#include "bfe/schedule.hpp"
#include "bfe/signal.hpp"

namespace bfe {

/// How the interrogation frequency is picked each iteration. The information-
/// gain argmax is the protocol's choice; the fixed mid-fringe rule
/// f = f_est + 1/(4T) is kept as a comparison baseline.
enum class LoSelection { utility_argmax, mid_fringe };

/// Full parameter set of one adaptive estimation run.
struct BfeConfig {
  Scheme scheme;
  double snr_r = 1540.0;
  /// Defaults to an interval of width 1/T_1 centered on initial_center_hz.
  /// May be overridden, but only with an interval at least that wide.
  std::optional<FrequencyInterval> initial_interval;
  double initial_center_hz = 0.0;
  std::size_t grid_size = kDefaultGridSize;
  int utility_quadrature_points = 64;
  int lo_candidate_count = 128;
  bool enhancement_enabled = true;
  /// Keep the verbatim trigger "T_i > T_max" (which never fires under a
  /// clamped schedule) instead of triggering on plateau iterations.
  bool literal_enhancement_trigger = false;
  LoSelection selection = LoSelection::utility_argmax;
  /// The protocol's knowledge of the T_R-dependent shift, compensated into
  /// every measurement request. Empty means no compensation.
  ShiftModel shift_model;
  std::uint64_t seed = 0;

  void validate() const;
};

/// One Bayesian iteration of a run.
struct EstimationStep {
  int index = 0;                  // i, 1-based
  double t_r_s = 0.0;             // T_i
  double lo_selected_hz = 0.0;    // argmax of the utility (inside the interval)
  double lo_freq_hz = 0.0;        // f_i after random enhancement
  double shift_hz = 0.0;          // compensation applied to the request
  double p_e = 0.0;               // observed normalized signal
  double f_est_hz = 0.0;
  double df_est_hz = 0.0;
  double cumulative_time_s = 0.0;  // t_j = Σ_{i≤j} T_i
  double interval_width_hz = 0.0;  // 1/T_i
  double norm_error = 0.0;         // |∫posterior - 1| after the update
  bool degenerate = false;         // update was degenerate; prior retained
};

struct EstimationTrace {
  std::vector<EstimationStep> steps;
  Schedule schedule;
  double final_f_est_hz = 0.0;
  double final_df_est_hz = 0.0;
  int degenerate_count = 0;
};

/// A measurement backend: maps a requested LO frequency and Ramsey time to an
/// observed normalized signal. The simulation oracle, a replay file, or a
/// hardware adapter all plug in here.
using MeasureFn = std::function<double(double f_hz, double t_r_s)>;

/// Expected Shannon-information gain (nats) of interrogating at frequency f
/// for time T_R, under the current prior. The outer p_e integral is
/// discretized on quadrature_points trapezoid nodes spanning [ε, 1-ε].
double utility(const GridDistribution& prior, double f_hz, double t_r_s, double snr_r,
               int quadrature_points);

/// Argmax of the utility over candidate_count frequencies spanning the
/// prior's interval; ties break toward the lowest frequency.
double select_lo_frequency(const GridDistribution& prior, double t_r_s, double snr_r,
                           int candidate_count, int quadrature_points);

/// Gaussian perturbation with standard deviation 2·delta_f_est, applied on the
/// schedule plateau to decorrelate repeated identical interrogations.
double random_enhancement(double f_hz, double delta_f_est_hz, Rng& rng);

/// Run the full adaptive loop: schedule generation, interval re-centering and
/// prior resets, information-gain frequency selection, shift compensation,
/// measurement, and Bayesian update, for exactly M_b iterations.
EstimationTrace bfe_run(const BfeConfig& config, const MeasureFn& measure);

/// Convenience: run against the simulation oracle with quantum projection
/// noise drawn from measurement_rng.
EstimationTrace bfe_run_simulated(const BfeConfig& config, const SignalModel& model,
                                  Rng& measurement_rng);

}  // namespace bfe

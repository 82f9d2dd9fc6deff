#pragma once

#include <functional>

#include "bfe/rng.hpp"

namespace bfe {

/// Maps a Ramsey time T_R (s) to the interrogation-time-dependent frequency
/// shift f_s (Hz). An empty function means no shift.
using ShiftModel = std::function<double(double)>;

/// Parameters of the simulated ensemble response: ground-truth transition
/// frequency, effective SNR parameter R (measurement variance p(1-p)/R),
/// fringe contrast, and the T_R-dependent shift model.
struct SignalModel {
  double f_c_true_hz = 0.0;
  double snr_r = 1540.0;
  double contrast = 1.0;
  ShiftModel shift_model;

  void validate() const;
};

/// Physical parameters of the coherent-population-trapping pulse sequence,
/// for the optional excited-state response model.
struct CptPhysicalParams {
  double rabi_rad_s = 0.0;      // average Rabi frequency Ω
  double decay_rad_s = 0.0;     // excited-state decay rate Γ
  double detuning_rad_s = 0.0;  // single-photon detuning δ
  double prep_pulse_s = 0.0;    // τ_p
  double detect_pulse_s = 0.0;  // τ_d

  /// α = Ω²/(Γ² + 3Ω² + 4δ²), always in (0, 1/3].
  double alpha() const;
  void validate() const;
};

/// Normalized Ramsey fringe s_f = ½[1 + cos 2π(f - f_c + f_s)T_R], in [0, 1].
double ramsey_signal(double f_hz, double f_c_hz, double f_s_hz, double t_r_s);

/// Fringe with reduced contrast C: ½[1 + C·cos 2π(f - f_c + f_s)T_R].
double ramsey_signal_with_contrast(double f_hz, double f_c_hz, double f_s_hz, double t_r_s,
                                   double contrast);

/// Probability of a single particle ending in clock state u ∈ {0, 1};
/// L_1 equals ramsey_signal and L_0 + L_1 = 1 identically.
double single_particle_likelihood(int u, double f_c_hz, double f_hz, double f_s_hz, double t_r_s);

/// Clamp used before computing the measurement variance p(1-p)/R: p is kept
/// in [ε, 1-ε] with ε = 1/(2R) so the likelihood never degenerates to a delta.
double clamp_population(double p_e, double snr_r);

/// Gaussian ensemble likelihood density of observing p_e given candidate f_c:
/// N(p_e; L_1(f_c, f), σ²) with σ² = p̃(1-p̃)/R from the clamped p̃.
double gaussian_likelihood(double p_e, double f_c_hz, double f_hz, double f_s_hz, double t_r_s,
                           double snr_r);

/// Simulated ensemble measurement: contrast-scaled fringe plus zero-mean
/// Gaussian noise of variance s(1-s)/R, clamped to [0, 1]. Stands in for the
/// experiment; deterministic given the random source state.
double simulate_measurement(const SignalModel& model, double f_hz, double t_r_s, Rng& rng);

/// Exact binomial alternative (atom_count projections), as an independent
/// cross-check of the Gaussian noise approximation.
double simulate_measurement_binomial(const SignalModel& model, double f_hz, double t_r_s,
                                     long atom_count, Rng& rng);

/// Excited-state amplitude of the CPT-Ramsey sequence:
/// P_e = α e^{-αΓτ_d} [1 - (1 - e^{-αΓτ_p}) |sec α| cos 2π(f - f_c + f_s)T_R].
double cpt_excited_probability(const CptPhysicalParams& params, double f_hz, double f_c_hz,
                               double f_s_hz, double t_r_s);

/// Evaluate the model's shift at T_R (0 when no shift model is set).
double frequency_shift(const SignalModel& model, double t_r_s);

}  // namespace bfe

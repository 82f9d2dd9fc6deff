#include "bfe/signal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bfe/errors.hpp"

namespace bfe {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kInvSqrt2Pi = 0.3989422804014326779;  // 1/√(2π)
}  // namespace

void SignalModel::validate() const {
  if (!(snr_r > 0.0)) throw ConfigError("signal model: R must be positive");
  if (!(contrast > 0.0) || contrast > 1.0) {
    throw ConfigError("signal model: contrast must be in (0, 1]");
  }
}

double CptPhysicalParams::alpha() const {
  return rabi_rad_s * rabi_rad_s /
         (decay_rad_s * decay_rad_s + 3.0 * rabi_rad_s * rabi_rad_s +
          4.0 * detuning_rad_s * detuning_rad_s);
}

void CptPhysicalParams::validate() const {
  if (!(rabi_rad_s > 0.0 && decay_rad_s > 0.0 && prep_pulse_s > 0.0 && detect_pulse_s > 0.0)) {
    throw ConfigError("CPT parameters: Omega, Gamma, tau_p, tau_d must be positive");
  }
}

double ramsey_signal(double f_hz, double f_c_hz, double f_s_hz, double t_r_s) {
  return 0.5 * (1.0 + std::cos(kTwoPi * (f_hz - f_c_hz + f_s_hz) * t_r_s));
}

double ramsey_signal_with_contrast(double f_hz, double f_c_hz, double f_s_hz, double t_r_s,
                                   double contrast) {
  return 0.5 * (1.0 + contrast * std::cos(kTwoPi * (f_hz - f_c_hz + f_s_hz) * t_r_s));
}

double single_particle_likelihood(int u, double f_c_hz, double f_hz, double f_s_hz,
                                  double t_r_s) {
  if (u != 0 && u != 1) {
    throw std::invalid_argument("single_particle_likelihood: outcome must be 0 or 1");
  }
  double s = ramsey_signal(f_hz, f_c_hz, f_s_hz, t_r_s);
  return u == 1 ? s : 1.0 - s;
}

double clamp_population(double p_e, double snr_r) {
  double eps = 0.5 / snr_r;
  return std::clamp(p_e, eps, 1.0 - eps);
}

double gaussian_likelihood(double p_e, double f_c_hz, double f_hz, double f_s_hz, double t_r_s,
                           double snr_r) {
  if (!(p_e >= 0.0 && p_e <= 1.0)) {
    throw std::invalid_argument("gaussian_likelihood: p_e must be in [0, 1]");
  }
  if (!(snr_r > 0.0)) throw std::invalid_argument("gaussian_likelihood: R must be positive");
  double clamped = clamp_population(p_e, snr_r);
  double sigma = std::sqrt(clamped * (1.0 - clamped) / snr_r);
  double resid = (p_e - ramsey_signal(f_hz, f_c_hz, f_s_hz, t_r_s)) / sigma;
  return kInvSqrt2Pi / sigma * std::exp(-0.5 * resid * resid);
}

double frequency_shift(const SignalModel& model, double t_r_s) {
  return model.shift_model ? model.shift_model(t_r_s) : 0.0;
}

double simulate_measurement(const SignalModel& model, double f_hz, double t_r_s, Rng& rng) {
  double s = ramsey_signal_with_contrast(f_hz, model.f_c_true_hz, frequency_shift(model, t_r_s),
                                         t_r_s, model.contrast);
  double noise_var = clamp_population(s, model.snr_r);
  double sigma = std::sqrt(noise_var * (1.0 - noise_var) / model.snr_r);
  return std::clamp(rng.normal(s, sigma), 0.0, 1.0);
}

double simulate_measurement_binomial(const SignalModel& model, double f_hz, double t_r_s,
                                     long atom_count, Rng& rng) {
  if (atom_count <= 0) {
    throw std::invalid_argument("simulate_measurement_binomial: atom count must be positive");
  }
  double s = ramsey_signal_with_contrast(f_hz, model.f_c_true_hz, frequency_shift(model, t_r_s),
                                         t_r_s, model.contrast);
  return static_cast<double>(rng.binomial(atom_count, s)) / static_cast<double>(atom_count);
}

double cpt_excited_probability(const CptPhysicalParams& params, double f_hz, double f_c_hz,
                               double f_s_hz, double t_r_s) {
  double a = params.alpha();
  double prep = 1.0 - std::exp(-a * params.decay_rad_s * params.prep_pulse_s);
  double det = std::exp(-a * params.decay_rad_s * params.detect_pulse_s);
  double fringe = std::cos(kTwoPi * (f_hz - f_c_hz + f_s_hz) * t_r_s);
  return a * det * (1.0 - prep * std::abs(1.0 / std::cos(a)) * fringe);
}

}  // namespace bfe

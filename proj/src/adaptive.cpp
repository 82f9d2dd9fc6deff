#include "bfe/adaptive.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include "bfe/errors.hpp"

namespace bfe {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kInvSqrt2Pi = 0.3989422804014326779;
constexpr double kDegenerateMass = 1e-300;
// exp(-46) ~ 1e-20: Gaussian factors below this cannot move any reported
// quantity at the tested tolerances, so the kernel skips them.
constexpr double kExpCutoff = 46.0;

// Outer quadrature over the observable p_e on [ε, 1-ε] with ε = 1/(2R).
// Nodes follow a cosine map, p(u) = ε + (1-2ε)sin²(πu/2) on uniform u: the
// evidence density develops O(1/R)-wide peaks at the fringe extremes (the
// clamped variance vanishes there), and a uniform p_e grid that cannot
// resolve them overweights extreme-fringe candidates by 10x and stalls the
// frequency selection. The compressed end spacing resolves those peaks at the
// default node count while keeping the center spacing fine enough for the
// mid-fringe evidence width sqrt(1/4R).
struct PeGrid {
  std::vector<double> node;
  std::vector<double> inv_two_sigma2;
  std::vector<double> norm;    // 1/(√(2π)σ)
  std::vector<double> weight;  // quadrature weight in p_e
};

PeGrid make_pe_grid(double snr_r, int points) {
  PeGrid grid;
  double eps = 0.5 / snr_r;
  double du = 1.0 / static_cast<double>(points - 1);
  grid.node.resize(points);
  grid.inv_two_sigma2.resize(points);
  grid.norm.resize(points);
  grid.weight.resize(points);
  for (int m = 0; m < points; ++m) {
    double u = du * static_cast<double>(m);
    double edge = std::sin(0.5 * std::numbers::pi * u);
    double x = eps + (1.0 - 2.0 * eps) * edge * edge;
    double var = x * (1.0 - x) / snr_r;
    double jacobian = (1.0 - 2.0 * eps) * 0.5 * std::numbers::pi * std::sin(std::numbers::pi * u);
    grid.node[m] = x;
    grid.inv_two_sigma2[m] = 0.5 / var;
    grid.norm[m] = kInvSqrt2Pi / std::sqrt(var);
    grid.weight[m] = du * jacobian * ((m == 0 || m == points - 1) ? 0.5 : 1.0);
  }
  return grid;
}

// Fringe value at every grid node for one LO frequency (the likelihood center
// as a function of the candidate transition frequency).
void fill_signal_table(const GridDistribution& prior, double f_hz, double t_r_s,
                       std::vector<double>& table) {
  table.resize(prior.size());
  for (std::size_t k = 0; k < prior.size(); ++k) {
    table[k] = 0.5 * (1.0 + std::cos(kTwoPi * (f_hz - prior.node(k)) * t_r_s));
  }
}

// Expected information gain for one LO frequency given its signal table.
// Algebraically identical to composing bayes_update + entropy per p_e node;
// the entropy of the unnormalized product w uses H = ln∫w - ∫w ln w / ∫w.
double utility_from_table(const GridDistribution& prior, const PeGrid& pe,
                          const std::vector<double>& signal, double prior_entropy,
                          std::vector<double>& scratch) {
  auto p = prior.weights();
  std::size_t n = p.size();
  double dx = prior.spacing();
  scratch.resize(n);
  double gain_sum = 0.0;
  for (std::size_t m = 0; m < pe.node.size(); ++m) {
    double x = pe.node[m];
    double inv2s2 = pe.inv_two_sigma2[m];
    double sum_w = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      double d = x - signal[k];
      double arg = d * d * inv2s2;
      double w = (p[k] > 0.0 && arg < kExpCutoff) ? p[k] * std::exp(-arg) : 0.0;
      scratch[k] = w;
      sum_w += w;
    }
    double mass = (sum_w - 0.5 * (scratch[0] + scratch[n - 1])) * dx;
    if (!(mass > kDegenerateMass)) continue;  // degenerate hypothetical posterior
    double sum_wlw = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      double w = scratch[k];
      if (w > 0.0) {
        double t = w * std::log(w);
        sum_wlw += (k == 0 || k == n - 1) ? 0.5 * t : t;
      }
    }
    double post_entropy = std::log(mass) - sum_wlw * dx / mass;
    gain_sum += pe.weight[m] * pe.norm[m] * mass * (prior_entropy - post_entropy);
  }
  // The likelihood is a pseudo-density in p_e (its width varies with p_e), so
  // the discretized expectation can land a hair below zero where nothing is
  // learnable; report that as zero gain.
  return std::max(gain_sum, 0.0);
}

// Posterior weights after observing p_e at LO frequency f (signal table given).
// Returns false when the update is degenerate; out is untouched in that case.
bool fused_posterior(const GridDistribution& prior, const std::vector<double>& signal,
                     double p_e, double snr_r, std::vector<double>& out) {
  auto p = prior.weights();
  std::size_t n = p.size();
  double clamped = clamp_population(p_e, snr_r);
  double inv2s2 = 0.5 * snr_r / (clamped * (1.0 - clamped));
  out.resize(n);
  double sum_w = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    double d = p_e - signal[k];
    double arg = d * d * inv2s2;
    double w = (p[k] > 0.0 && arg < kExpCutoff) ? p[k] * std::exp(-arg) : 0.0;
    out[k] = w;
    sum_w += w;
  }
  double mass = (sum_w - 0.5 * (out[0] + out[n - 1])) * prior.spacing();
  if (!(mass > kDegenerateMass)) return false;
  for (double& w : out) w /= mass;
  return true;
}

void require_quadrature(int points) {
  if (points < 8) {
    throw std::invalid_argument("utility: at least 8 p_e quadrature points required");
  }
}

}  // namespace

void BfeConfig::validate() const {
  scheme.validate();
  if (!(snr_r > 0.0)) throw ConfigError("bfe config: R must be positive");
  if (grid_size < kMinGridSize) {
    throw ConfigError("bfe config: grid size must be at least " + std::to_string(kMinGridSize));
  }
  if (utility_quadrature_points < 8) {
    throw ConfigError("bfe config: at least 8 p_e quadrature points required");
  }
  if (lo_candidate_count < 2) {
    throw ConfigError("bfe config: at least 2 LO candidates required");
  }
}

double utility(const GridDistribution& prior, double f_hz, double t_r_s, double snr_r,
               int quadrature_points) {
  require_quadrature(quadrature_points);
  if (!(snr_r > 0.0)) throw std::invalid_argument("utility: R must be positive");
  if (!(t_r_s > 0.0)) throw std::invalid_argument("utility: T_R must be positive");
  PeGrid pe = make_pe_grid(snr_r, quadrature_points);
  std::vector<double> signal;
  std::vector<double> scratch;
  fill_signal_table(prior, f_hz, t_r_s, signal);
  return utility_from_table(prior, pe, signal, entropy(prior), scratch);
}

double select_lo_frequency(const GridDistribution& prior, double t_r_s, double snr_r,
                           int candidate_count, int quadrature_points) {
  require_quadrature(quadrature_points);
  if (candidate_count < 2) {
    throw std::invalid_argument("select_lo_frequency: at least 2 candidates required");
  }
  PeGrid pe = make_pe_grid(snr_r, quadrature_points);
  double prior_entropy = entropy(prior);
  double lo = prior.interval().lo();
  double step = prior.interval().width() / static_cast<double>(candidate_count - 1);
  std::vector<double> signal;
  std::vector<double> scratch;
  double best_f = lo;
  double best_u = -std::numeric_limits<double>::infinity();
  for (int c = 0; c < candidate_count; ++c) {
    double f = lo + step * static_cast<double>(c);
    fill_signal_table(prior, f, t_r_s, signal);
    double u = utility_from_table(prior, pe, signal, prior_entropy, scratch);
    if (u > best_u) {  // ties keep the lowest frequency
      best_u = u;
      best_f = f;
    }
  }
  return best_f;
}

double random_enhancement(double f_hz, double delta_f_est_hz, Rng& rng) {
  if (delta_f_est_hz < 0.0) {
    throw std::invalid_argument("random_enhancement: delta_f_est must be non-negative");
  }
  return f_hz + rng.normal(0.0, 2.0 * delta_f_est_hz);
}

EstimationTrace bfe_run(const BfeConfig& config, const MeasureFn& measure) {
  config.validate();
  if (!measure) throw std::invalid_argument("bfe_run: measurement function required");

  EstimationTrace trace;
  trace.schedule = build_schedule(config.scheme);
  const auto& times = trace.schedule.times_s;
  double t1 = times.front();

  FrequencyInterval interval =
      config.initial_interval
          ? *config.initial_interval
          : FrequencyInterval::centered(config.initial_center_hz, 1.0 / t1);
  if (interval.width() < (1.0 / t1) * (1.0 - 1e-9)) {
    throw ConfigError("bfe config: initial interval must be at least 1/T_1 wide");
  }

  Rng rng(config.seed);
  PeGrid pe = make_pe_grid(config.snr_r, config.utility_quadrature_points);
  GridDistribution prior = uniform_prior(interval, config.grid_size);

  int ramp_end = trace.schedule.scheme.ramp_end();
  double f_est = interval.center();
  double df_est = stddev(prior);
  double cumulative = 0.0;
  std::vector<double> signal;
  std::vector<double> scratch;
  std::vector<double> posterior_w;

  trace.steps.reserve(times.size());
  for (int i = 1; i <= static_cast<int>(times.size()); ++i) {
    double t_r = times[static_cast<std::size_t>(i - 1)];
    double width = 1.0 / t_r;

    if (i > 1) {
      interval = FrequencyInterval::centered(f_est, width);
      double dx = width / static_cast<double>(config.grid_size - 1);
      // A posterior narrower than the grid cannot be represented; floor the
      // reset width at half a node spacing.
      double sigma = std::max(df_est, 0.5 * dx);
      prior = gaussian_prior(f_est, sigma, interval, config.grid_size);
    }

    double f_sel;
    if (config.selection == LoSelection::mid_fringe) {
      f_sel = mean(prior) + 0.25 / t_r;
    } else {
      double prior_entropy = entropy(prior);
      double lo = interval.lo();
      double step = interval.width() / static_cast<double>(config.lo_candidate_count - 1);
      double best_u = -std::numeric_limits<double>::infinity();
      f_sel = lo;
      for (int c = 0; c < config.lo_candidate_count; ++c) {
        double f = lo + step * static_cast<double>(c);
        fill_signal_table(prior, f, t_r, signal);
        double u = utility_from_table(prior, pe, signal, prior_entropy, scratch);
        if (u > best_u) {
          best_u = u;
          f_sel = f;
        }
      }
    }

    bool on_plateau = config.literal_enhancement_trigger
                          ? t_r > config.scheme.t_max_s
                          : i >= ramp_end;
    double f_i = f_sel;
    if (config.enhancement_enabled && on_plateau) {
      f_i = random_enhancement(f_sel, df_est, rng);
    }

    double shift = config.shift_model ? config.shift_model(t_r) : 0.0;
    double p_e = measure(f_i - shift, t_r);
    if (!(p_e >= 0.0 && p_e <= 1.0)) {
      throw std::invalid_argument("bfe_run: measurement returned p_e outside [0, 1]");
    }

    fill_signal_table(prior, f_i, t_r, signal);
    bool ok = fused_posterior(prior, signal, p_e, config.snr_r, posterior_w);
    EstimationStep step;
    step.degenerate = !ok;
    if (ok) {
      prior = GridDistribution(interval, std::move(posterior_w));
      posterior_w = {};
    } else {
      ++trace.degenerate_count;  // keep the prior and re-measure next iteration
    }

    f_est = mean(prior);
    df_est = stddev(prior);
    cumulative += t_r;

    step.index = i;
    step.t_r_s = t_r;
    step.lo_selected_hz = f_sel;
    step.lo_freq_hz = f_i;
    step.shift_hz = shift;
    step.p_e = p_e;
    step.f_est_hz = f_est;
    step.df_est_hz = df_est;
    step.cumulative_time_s = cumulative;
    step.interval_width_hz = interval.width();
    step.norm_error = std::abs(integral(prior) - 1.0);
    trace.steps.push_back(step);
  }

  trace.final_f_est_hz = f_est;
  trace.final_df_est_hz = df_est;
  return trace;
}

EstimationTrace bfe_run_simulated(const BfeConfig& config, const SignalModel& model,
                                  Rng& measurement_rng) {
  model.validate();
  return bfe_run(config, [&](double f_hz, double t_r_s) {
    return simulate_measurement(model, f_hz, t_r_s, measurement_rng);
  });
}

}  // namespace bfe

#include "bfe/posterior.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "bfe/errors.hpp"

namespace bfe {

namespace {

constexpr double kDegenerateMass = 1e-300;

// Trapezoidal sum of f(node_k)*w_k over a uniform grid with spacing dx.
double trapezoid(std::span<const double> values, double dx) {
  if (values.size() < 2) return 0.0;
  double sum = 0.5 * (values.front() + values.back());
  for (std::size_t k = 1; k + 1 < values.size(); ++k) sum += values[k];
  return sum * dx;
}

std::vector<double> normalized(std::vector<double> w, double dx, const char* what) {
  double mass = trapezoid(w, dx);
  if (!(mass > kDegenerateMass) || !std::isfinite(mass)) {
    throw DegenerateUpdate(std::string(what) + ": total probability mass is " +
                           std::to_string(mass));
  }
  for (double& v : w) v /= mass;
  return w;
}

}  // namespace

FrequencyInterval::FrequencyInterval(double lo_hz, double hi_hz)
    : lo_(lo_hz), hi_(hi_hz), width_(hi_hz - lo_hz) {
  if (!(std::isfinite(lo_) && std::isfinite(hi_)) || !(lo_ < hi_)) {
    throw ConfigError("FrequencyInterval requires f_l < f_r, got [" + std::to_string(lo_hz) +
                      ", " + std::to_string(hi_hz) + "]");
  }
}

FrequencyInterval FrequencyInterval::centered(double center_hz, double width_hz) {
  if (!(width_hz > 0.0) || !std::isfinite(center_hz)) {
    throw ConfigError("FrequencyInterval::centered requires a positive width");
  }
  double half = 0.5 * width_hz;
  return FrequencyInterval(center_hz - half, center_hz + half, width_hz);
}

GridDistribution::GridDistribution(FrequencyInterval interval, std::vector<double> weights)
    : interval_(interval), weights_(std::move(weights)) {
  if (weights_.size() < kMinGridSize) {
    throw ConfigError("grid size must be at least " + std::to_string(kMinGridSize) + ", got " +
                      std::to_string(weights_.size()));
  }
  spacing_ = interval_.width() / static_cast<double>(weights_.size() - 1);
  for (double w : weights_) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw ConfigError("grid weights must be finite and non-negative");
    }
  }
}

GridDistribution uniform_prior(const FrequencyInterval& interval, std::size_t grid_size) {
  if (grid_size < kMinGridSize) {
    throw ConfigError("uniform_prior: grid size must be at least " +
                      std::to_string(kMinGridSize));
  }
  std::vector<double> w(grid_size, 1.0 / interval.width());
  return GridDistribution(interval, std::move(w));
}

GridDistribution gaussian_prior(double mu_hz, double sigma_hz, const FrequencyInterval& interval,
                                std::size_t grid_size) {
  if (!(sigma_hz > 0.0)) {
    throw std::invalid_argument("gaussian_prior: sigma must be positive");
  }
  if (!interval.contains(mu_hz)) {
    throw std::invalid_argument("gaussian_prior: mu must lie inside the interval");
  }
  if (grid_size < kMinGridSize) {
    throw ConfigError("gaussian_prior: grid size must be at least " +
                      std::to_string(kMinGridSize));
  }
  double dx = interval.width() / static_cast<double>(grid_size - 1);
  std::vector<double> w(grid_size);
  for (std::size_t k = 0; k < grid_size; ++k) {
    double z = (interval.lo() + dx * static_cast<double>(k) - mu_hz) / sigma_hz;
    w[k] = std::exp(-0.5 * z * z);
  }
  try {
    w = normalized(std::move(w), dx, "gaussian_prior");
  } catch (const DegenerateUpdate&) {
    throw std::invalid_argument(
        "gaussian_prior: sigma too small to be represented on this grid");
  }
  return GridDistribution(interval, std::move(w));
}

std::optional<GridDistribution> try_bayes_update(
    const GridDistribution& prior, const std::function<double(double)>& likelihood_at) {
  std::vector<double> w(prior.size());
  for (std::size_t k = 0; k < prior.size(); ++k) {
    double like = likelihood_at(prior.node(k));
    if (!(like >= 0.0) || !std::isfinite(like)) {
      throw std::invalid_argument("bayes_update: likelihood must be finite and non-negative");
    }
    w[k] = prior.weights()[k] * like;
  }
  double mass = trapezoid(w, prior.spacing());
  if (!(mass > kDegenerateMass)) return std::nullopt;
  for (double& v : w) v /= mass;
  return GridDistribution(prior.interval(), std::move(w));
}

GridDistribution bayes_update(const GridDistribution& prior,
                              const std::function<double(double)>& likelihood_at) {
  auto post = try_bayes_update(prior, likelihood_at);
  if (!post) {
    throw DegenerateUpdate("bayes_update: likelihood annihilated the prior");
  }
  return *std::move(post);
}

double integral(const GridDistribution& dist) {
  return trapezoid(dist.weights(), dist.spacing());
}

double mean(const GridDistribution& dist) {
  auto w = dist.weights();
  std::size_t n = w.size();
  double sum = 0.5 * (dist.node(0) * w[0] + dist.node(n - 1) * w[n - 1]);
  for (std::size_t k = 1; k + 1 < n; ++k) sum += dist.node(k) * w[k];
  return sum * dist.spacing();
}

double stddev(const GridDistribution& dist) {
  double mu = mean(dist);
  auto w = dist.weights();
  std::size_t n = w.size();
  auto dev2 = [&](std::size_t k) {
    double d = dist.node(k) - mu;
    return d * d * w[k];
  };
  double sum = 0.5 * (dev2(0) + dev2(n - 1));
  for (std::size_t k = 1; k + 1 < n; ++k) sum += dev2(k);
  double var = sum * dist.spacing();
  return std::sqrt(std::max(var, 0.0));
}

double entropy(const GridDistribution& dist) {
  auto w = dist.weights();
  std::size_t n = w.size();
  auto plogp = [&](std::size_t k) { return w[k] > 0.0 ? w[k] * std::log(w[k]) : 0.0; };
  double sum = 0.5 * (plogp(0) + plogp(n - 1));
  for (std::size_t k = 1; k + 1 < n; ++k) sum += plogp(k);
  return -sum * dist.spacing();
}

GridDistribution regrid(const GridDistribution& dist, const FrequencyInterval& new_interval,
                        std::size_t grid_size) {
  if (!dist.interval().overlaps(new_interval)) {
    throw RegridError("regrid: target interval is disjoint from the source interval");
  }
  if (grid_size < kMinGridSize) {
    throw ConfigError("regrid: grid size must be at least " + std::to_string(kMinGridSize));
  }
  double dx = new_interval.width() / static_cast<double>(grid_size - 1);
  std::vector<double> w(grid_size, 0.0);
  auto src = dist.weights();
  double src_lo = dist.interval().lo();
  double src_dx = dist.spacing();
  double src_span = static_cast<double>(src.size() - 1);
  for (std::size_t k = 0; k < grid_size; ++k) {
    double f = new_interval.lo() + dx * static_cast<double>(k);
    double pos = (f - src_lo) / src_dx;
    if (pos < 0.0 || pos > src_span) continue;  // density is zero outside the old interval
    auto idx = static_cast<std::size_t>(std::min(pos, src_span - 1.0));
    double frac = pos - static_cast<double>(idx);
    w[k] = src[idx] + frac * (src[idx + 1] - src[idx]);
  }
  try {
    w = normalized(std::move(w), dx, "regrid");
  } catch (const DegenerateUpdate&) {
    throw RegridError("regrid: no probability mass inside the target interval");
  }
  return GridDistribution(new_interval, std::move(w));
}

}  // namespace bfe

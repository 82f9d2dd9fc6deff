#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace bfe {

/// Closed frequency interval [lo, hi] in Hz (relative to a nominal carrier).
///
/// The width is stored at construction: centered() keeps width() bit-exact
/// equal to the requested value (the adaptive loop re-centers intervals to
/// width 1/T_i and downstream checks compare widths exactly), while hi-lo
/// agrees with it to rounding.
class FrequencyInterval {
 public:
  FrequencyInterval(double lo_hz, double hi_hz);
  static FrequencyInterval centered(double center_hz, double width_hz);

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double width() const { return width_; }
  double center() const { return lo_ + 0.5 * width_; }

  bool contains(double f_hz) const { return f_hz >= lo_ && f_hz <= hi_; }
  bool overlaps(const FrequencyInterval& other) const {
    return lo_ < other.hi_ && other.lo_ < hi_;
  }

 private:
  FrequencyInterval(double lo_hz, double hi_hz, double width_hz)
      : lo_(lo_hz), hi_(hi_hz), width_(width_hz) {}
  double lo_;
  double hi_;
  double width_;
};

/// Probability density over a frequency interval, discretized on a uniform
/// grid. Densities are per-Hz; the trapezoidal integral over the interval is
/// kept at 1 by every constructor and operation. Immutable after construction.
class GridDistribution {
 public:
  GridDistribution(FrequencyInterval interval, std::vector<double> weights);

  const FrequencyInterval& interval() const { return interval_; }
  std::size_t size() const { return weights_.size(); }
  double spacing() const { return spacing_; }
  double node(std::size_t k) const { return interval_.lo() + spacing_ * static_cast<double>(k); }
  std::span<const double> weights() const { return weights_; }

 private:
  FrequencyInterval interval_;
  std::vector<double> weights_;
  double spacing_;
};

inline constexpr std::size_t kMinGridSize = 16;
inline constexpr std::size_t kDefaultGridSize = 2048;

/// Flat density 1/width over the interval.
GridDistribution uniform_prior(const FrequencyInterval& interval, std::size_t grid_size);

/// Gaussian truncated to the interval and renormalized. mu must lie inside.
GridDistribution gaussian_prior(double mu_hz, double sigma_hz, const FrequencyInterval& interval,
                                std::size_t grid_size);

/// Pointwise product with the likelihood, renormalized on the same grid.
/// Throws DegenerateUpdate if the product carries no mass.
GridDistribution bayes_update(const GridDistribution& prior,
                              const std::function<double(double)>& likelihood_at);

/// Non-throwing form used by the adaptive loop; nullopt on a degenerate update.
std::optional<GridDistribution> try_bayes_update(const GridDistribution& prior,
                                                 const std::function<double(double)>& likelihood_at);

/// Trapezoidal integral of the weights (1 up to rounding for a valid distribution).
double integral(const GridDistribution& dist);

/// First moment (the frequency estimator).
double mean(const GridDistribution& dist);

/// Square root of the second central moment; negative variance from rounding clamps to 0.
double stddev(const GridDistribution& dist);

/// Differential entropy -∫ p ln p df in nats; zero-density nodes contribute nothing.
double entropy(const GridDistribution& dist);

/// Linear interpolation of the density onto a new grid, zero outside the old
/// interval, renormalized. Throws RegridError when the intervals are disjoint
/// or the overlap carries no mass.
GridDistribution regrid(const GridDistribution& dist, const FrequencyInterval& new_interval,
                        std::size_t grid_size);

}  // namespace bfe

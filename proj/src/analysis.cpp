#include "bfe/analysis.hpp"

#include <cmath>
#include <stdexcept>

#include "bfe/errors.hpp"

namespace bfe {

void FractionalSeries::validate() const {
  if (!(tau0_s > 0.0)) throw ConfigError("fractional series: sample interval must be positive");
  if (samples.size() < 4) throw ConfigError("fractional series: at least 4 samples required");
}

std::vector<AllanPoint> allan_deviation(const FractionalSeries& series,
                                        std::span<const double> taus) {
  series.validate();
  std::size_t n = series.samples.size();

  // Integrated phase; x[0] = 0, x has n+1 points. The first sample is
  // subtracted before integrating (the estimator only sees differences),
  // which keeps the accumulation well conditioned when the mean offset
  // dominates the fluctuations.
  std::vector<double> phase(n + 1, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    phase[k + 1] = phase[k] + (series.samples[k] - series.samples[0]) * series.tau0_s;
  }

  std::vector<AllanPoint> out;
  out.reserve(taus.size());
  for (double tau : taus) {
    AllanPoint point;
    point.tau_s = tau;
    double ratio = tau / series.tau0_s;
    auto m = static_cast<long>(std::llround(ratio));
    if (m < 1 || std::abs(ratio - static_cast<double>(m)) > 1e-9 * ratio) {
      point.error = "tau is not a positive integer multiple of the sample interval";
      out.push_back(point);
      continue;
    }
    if (static_cast<std::size_t>(m) > n / 3) {
      point.error = "tau too long for the series (m exceeds N/3)";
      out.push_back(point);
      continue;
    }
    auto mu = static_cast<std::size_t>(m);
    std::size_t terms = n - 2 * mu + 1;
    double sum = 0.0;
    for (std::size_t k = 0; k < terms; ++k) {
      double d2 = phase[k + 2 * mu] - 2.0 * phase[k + mu] + phase[k];
      sum += d2 * d2;
    }
    double avar = sum / (2.0 * tau * tau * static_cast<double>(terms));
    point.adev = std::sqrt(avar);
    // Equivalent degrees of freedom for the overlapping estimator under white
    // FM (Riley's approximation); used only for the 1σ error column.
    double nn = static_cast<double>(n);
    double mm = static_cast<double>(mu);
    double edf = (3.0 * (nn - 1.0) / (2.0 * mm) - 2.0 * (nn - 2.0) / nn) *
                 (4.0 * mm * mm) / (4.0 * mm * mm + 5.0);
    point.adev_err = edf > 0.0 ? point.adev / std::sqrt(edf) : 0.0;
    point.valid = true;
    out.push_back(point);
  }
  return out;
}

std::vector<double> default_taus(const FractionalSeries& series) {
  series.validate();
  std::vector<double> taus;
  std::size_t max_m = series.samples.size() / 3;
  for (std::size_t m = 1; m <= max_m; m *= 2) {
    taus.push_back(static_cast<double>(m) * series.tau0_s);
  }
  return taus;
}

LogLogFit fit_loglog_slope(std::span<const double> x, std::span<const double> y,
                           std::size_t first, std::size_t last) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("fit_loglog_slope: x and y sizes differ");
  }
  if (last >= x.size() || first > last || last - first + 1 < 3) {
    throw std::invalid_argument("fit_loglog_slope: window must hold at least 3 points");
  }
  std::size_t count = last - first + 1;
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t k = first; k <= last; ++k) {
    if (!(x[k] > 0.0) || !(y[k] > 0.0)) {
      throw std::invalid_argument("fit_loglog_slope: values must be positive");
    }
    double lx = std::log(x[k]);
    double ly = std::log(y[k]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  double nn = static_cast<double>(count);
  double denom = nn * sxx - sx * sx;
  if (denom == 0.0) throw std::invalid_argument("fit_loglog_slope: degenerate abscissas");
  LogLogFit fit;
  fit.slope = (nn * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / nn;
  double ss = 0.0;
  for (std::size_t k = first; k <= last; ++k) {
    double r = std::log(y[k]) - (fit.intercept + fit.slope * std::log(x[k]));
    ss += r * r;
  }
  fit.rms_residual = std::sqrt(ss / nn);
  return fit;
}

double fit_sqrt_tau_coefficient(std::span<const AllanPoint> points) {
  double sum = 0.0;
  std::size_t count = 0;
  for (const AllanPoint& p : points) {
    if (!p.valid || !(p.adev > 0.0)) continue;
    sum += std::log(p.adev) + 0.5 * std::log(p.tau_s);
    ++count;
  }
  if (count == 0) {
    throw std::invalid_argument("fit_sqrt_tau_coefficient: no valid Allan points");
  }
  return std::exp(sum / static_cast<double>(count));
}

double improvement_db(double sigma_a, double sigma_b) {
  if (!(sigma_a > 0.0) || !(sigma_b > 0.0)) {
    throw std::invalid_argument("improvement_db: stabilities must be positive");
  }
  return 10.0 * std::log10(sigma_a / sigma_b);
}

}  // namespace bfe

#pragma once

#include <span>
#include <string>
#include <vector>

namespace bfe {

/// Fractional-frequency samples y_k at uniform spacing tau0.
struct FractionalSeries {
  std::vector<double> samples;
  double tau0_s = 1.0;

  void validate() const;
};

/// One Allan-deviation point. invalid entries carry a reason instead of a
/// value (requested τ not a multiple of τ₀, or too long for the series).
struct AllanPoint {
  double tau_s = 0.0;
  double adev = 0.0;
  double adev_err = 0.0;  // 1σ fractional-confidence estimate, adev/√edf (white-FM edf)
  bool valid = false;
  std::string error;
};

/// Overlapping Allan deviation at the requested averaging times:
/// σ_y²(mτ₀) = Σ (x_{k+2m} - 2x_{k+m} + x_k)² / (2 m²τ₀² (N-2m+1))
/// over the integrated phase x of the N samples.
std::vector<AllanPoint> allan_deviation(const FractionalSeries& series,
                                        std::span<const double> taus);

/// Octave-spaced τ values from τ₀ up to N·τ₀/3.
std::vector<double> default_taus(const FractionalSeries& series);

struct LogLogFit {
  double slope = 0.0;
  double intercept = 0.0;      // in ln y at ln x = 0
  double rms_residual = 0.0;
};

/// Least-squares line through (ln x, ln y) over [first, last] (inclusive
/// indices). All values in the window must be positive.
LogLogFit fit_loglog_slope(std::span<const double> x, std::span<const double> y,
                           std::size_t first, std::size_t last);

/// Coefficient c of σ_y(τ) = c/√τ fitted over valid points with the slope
/// pinned at -1/2 (how √τ stabilities are quoted).
double fit_sqrt_tau_coefficient(std::span<const AllanPoint> points);

/// 10·log10(sigma_a / sigma_b): positive when b is the better stability.
double improvement_db(double sigma_a, double sigma_b);

}  // namespace bfe

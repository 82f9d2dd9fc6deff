#include "bfe/schedule.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "bfe/errors.hpp"

namespace bfe {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

void Scheme::validate() const {
  if (!(growth_ratio > 1.0)) throw ConfigError("scheme: growth ratio a must exceed 1");
  if (steps_per_growth < 1) throw ConfigError("scheme: g must be a positive integer");
  if (plateau_steps < 0) throw ConfigError("scheme: M_tilde must be non-negative");
  if (iterations < 1) throw ConfigError("scheme: M_b must be a positive integer");
  if (plateau_steps >= iterations) throw ConfigError("scheme: M_tilde must be below M_b");
  if (!(t_max_s > 0.0)) throw ConfigError("scheme: T_max must be positive");
  if (t_min_s < 0.0) throw ConfigError("scheme: T_1 must be non-negative");
  if (t_min_s > t_max_s) throw ConfigError("scheme: T_1 must not exceed T_max");
}

Schedule build_schedule(const Scheme& scheme) {
  scheme.validate();
  Schedule out;
  out.scheme = scheme;
  out.times_s.resize(static_cast<std::size_t>(scheme.iterations));
  int j = scheme.ramp_end();
  out.ramp_misaligned = scheme.steps_per_growth > 1 && j % scheme.steps_per_growth != 0;
  for (int i = 1; i <= scheme.iterations; ++i) {
    double t;
    if (i >= j) {
      t = scheme.t_max_s;
    } else {
      double exponent = std::ceil(static_cast<double>(j - i) /
                                  static_cast<double>(scheme.steps_per_growth));
      t = scheme.t_max_s / std::pow(scheme.growth_ratio, exponent);
    }
    if (scheme.t_min_s > 0.0 && t < scheme.t_min_s) {
      t = scheme.t_min_s;
      out.clamped_indices.push_back(i);
    }
    out.times_s[static_cast<std::size_t>(i - 1)] = t;
  }
  return out;
}

double total_time(const Schedule& schedule) {
  double sum = 0.0;
  for (double t : schedule.times_s) sum += t;
  return sum;
}

double predicted_precision(const Scheme& scheme, double snr_r) {
  scheme.validate();
  if (!(snr_r > 0.0)) throw ConfigError("predicted_precision: R must be positive");
  double a = scheme.growth_ratio;
  double sqrt_r = std::sqrt(snr_r);
  if (scheme.plateau_steps > 0) {
    double m = static_cast<double>(scheme.plateau_steps);
    double a2 = a * a;
    return std::sqrt(1.0 / (m + a2 / (a2 - 1.0))) / (kTwoPi * sqrt_r * scheme.t_max_s);
  }
  if (scheme.steps_per_growth > 1) {
    double g = static_cast<double>(scheme.steps_per_growth);
    return std::sqrt(1.0 - 1.0 / (a * a)) / (kTwoPi * std::sqrt(g) * sqrt_r * scheme.t_max_s);
  }
  double total = scheme.t_max_s * a / (a - 1.0);
  return std::sqrt(1.0 + 2.0 / (a - 1.0)) / (kTwoPi * sqrt_r * total);
}

double solve_ratio_for_budget(double total_s, int steps_per_growth, double t_max_s) {
  double floor = static_cast<double>(steps_per_growth) * t_max_s;
  if (!(total_s > floor)) {
    throw InfeasibleBudget("budget T = " + std::to_string(total_s) +
                           " s must exceed g*T_max = " + std::to_string(floor) + " s");
  }
  return total_s / (total_s - floor);
}

double solve_ratio_for_plateau_budget(double total_s, int plateau_steps, double t_max_s) {
  double m = static_cast<double>(plateau_steps);
  double denom = total_s - (m + 1.0) * t_max_s;
  if (!(denom > 0.0)) {
    throw InfeasibleBudget("budget T = " + std::to_string(total_s) +
                           " s must exceed (M_tilde+1)*T_max");
  }
  return (total_s - m * t_max_s) / denom;
}

namespace {
IterationCount rounded_count(double exact) {
  IterationCount out;
  out.exact = exact;
  out.rounded = static_cast<int>(std::floor(exact + 0.5));  // round half up
  return out;
}
}  // namespace

IterationCount iteration_count(double growth_ratio, int steps_per_growth, int plateau_steps,
                               double t_max_s, double t_min_s) {
  if (!(growth_ratio > 1.0) || !(t_max_s > 0.0) || !(t_min_s > 0.0) || t_min_s > t_max_s) {
    throw ConfigError("iteration_count: need a > 1 and 0 < T_min <= T_max");
  }
  double ramp = std::log(t_max_s / t_min_s) / std::log(growth_ratio) + 1.0;
  double exact = static_cast<double>(steps_per_growth) * ramp +
                 static_cast<double>(plateau_steps);
  return rounded_count(exact);
}

IterationCount iteration_count_for_budget(double growth_ratio, double total_s, double t_max_s,
                                          double t_min_s) {
  if (!(growth_ratio > 1.0) || !(t_max_s > 0.0) || !(t_min_s > 0.0) || t_min_s > t_max_s) {
    throw ConfigError("iteration_count_for_budget: need a > 1 and 0 < T_min <= T_max");
  }
  double a = growth_ratio;
  double exact = (total_s - a * t_max_s / (a - 1.0)) / t_max_s +
                 std::log(t_max_s / t_min_s) / std::log(a) + 1.0;
  return rounded_count(exact);
}

std::vector<double> fisher_limit_curve(const Schedule& schedule, double snr_r) {
  std::vector<double> out(schedule.times_s.size());
  double sum_t2 = 0.0;
  for (std::size_t k = 0; k < schedule.times_s.size(); ++k) {
    sum_t2 += schedule.times_s[k] * schedule.times_s[k];
    out[k] = 1.0 / (kTwoPi * std::sqrt(snr_r * sum_t2));
  }
  return out;
}

}  // namespace bfe

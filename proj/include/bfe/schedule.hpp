#pragma once

#include <vector>

namespace bfe {

/// Interrogation-time scheme {a, g, M̃, M_b} with the time bounds T_1, T_max.
///
/// The ramp ends at j = M_b - M̃: iterations i < j grow as T_max / a^⌈(j-i)/g⌉
/// and iterations i ≥ j hold at T_max. t_min_s = 0 means "no explicit floor"
/// (the generated minimum is used); a positive floor clamps shorter entries.
struct Scheme {
  double growth_ratio = 1.25;  // a > 1
  int steps_per_growth = 1;    // g ≥ 1
  int plateau_steps = 0;       // M̃
  int iterations = 1;          // M_b
  double t_min_s = 0.0;        // T_1 (optional floor)
  double t_max_s = 0.020;      // T_max

  int ramp_end() const { return iterations - plateau_steps; }
  void validate() const;
};

/// The generated time sequence plus which entries were clamped up to T_1.
struct Schedule {
  std::vector<double> times_s;
  Scheme scheme;
  std::vector<int> clamped_indices;  // 1-based iteration indices raised to t_min_s
  bool ramp_misaligned = false;      // j not a multiple of g (run-log note, not an error)
};

Schedule build_schedule(const Scheme& scheme);

/// Exact sum of the interrogation times.
double total_time(const Schedule& schedule);

/// Closed-form final precision Δf_est for the scheme (Hz). Branch selection:
/// M̃ > 0 uses the plateau form, M̃ = 0 with g > 1 the g-step form, otherwise
/// the pure-ramp form √(1 + 2/(a-1)) / (2π√R·T) with T = T_max·a/(a-1).
double predicted_precision(const Scheme& scheme, double snr_r);

/// Growth ratio meeting a total-time budget, a = T/(T - g·T_max).
/// Throws InfeasibleBudget if T ≤ g·T_max.
double solve_ratio_for_budget(double total_s, int steps_per_growth, double t_max_s);

/// Plateau variant, a = (T - M̃·T_max)/(T - (M̃+1)·T_max).
double solve_ratio_for_plateau_budget(double total_s, int plateau_steps, double t_max_s);

/// Iteration-count formulas return the rounded count (half up) together with
/// the unrounded value, since published parameter sets are not exactly integral.
struct IterationCount {
  int rounded = 0;
  double exact = 0.0;
};

/// M_b = g·[log_a(T_max/T_min) + 1] + M̃.
IterationCount iteration_count(double growth_ratio, int steps_per_growth, int plateau_steps,
                               double t_max_s, double t_min_s);

/// M_b = [T - a·T_max/(a-1)]/T_max + log_a(T_max/T_min) + 1, for a total budget T.
IterationCount iteration_count_for_budget(double growth_ratio, double total_s, double t_max_s,
                                          double t_min_s);

/// Fisher-limit curve 1/(2π√(R·Σ_{i≤j} T_i²)) per iteration j, the analytic
/// reference the Monte Carlo standard deviation is compared against.
std::vector<double> fisher_limit_curve(const Schedule& schedule, double snr_r);

}  // namespace bfe

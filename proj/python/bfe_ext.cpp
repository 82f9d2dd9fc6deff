#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bfe/adaptive.hpp"
#include "bfe/analysis.hpp"
#include "bfe/locking.hpp"
#include "bfe/posterior.hpp"
#include "bfe/rng.hpp"
#include "bfe/schedule.hpp"
#include "bfe/signal.hpp"

namespace py = pybind11;
using namespace bfe;

namespace {

std::vector<double> nodes_of(const GridDistribution& dist) {
  std::vector<double> out(dist.size());
  for (std::size_t k = 0; k < dist.size(); ++k) out[k] = dist.node(k);
  return out;
}

}  // namespace

PYBIND11_MODULE(bfe_core, m) {
  m.doc() = "Adaptive Bayesian frequency estimation and clock-locking simulation";

  py::class_<Rng>(m, "Rng")
      .def(py::init<std::uint64_t>(), py::arg("seed"))
      .def("normal", &Rng::normal, py::arg("mean"), py::arg("stddev"))
      .def("uniform", &Rng::uniform, py::arg("lo"), py::arg("hi"))
      .def_static("derive_stream", &Rng::derive_stream, py::arg("master"), py::arg("stream"));

  py::class_<FrequencyInterval>(m, "FrequencyInterval")
      .def(py::init<double, double>(), py::arg("lo_hz"), py::arg("hi_hz"))
      .def_static("centered", &FrequencyInterval::centered, py::arg("center_hz"),
                  py::arg("width_hz"))
      .def_property_readonly("lo", &FrequencyInterval::lo)
      .def_property_readonly("hi", &FrequencyInterval::hi)
      .def_property_readonly("width", &FrequencyInterval::width)
      .def_property_readonly("center", &FrequencyInterval::center)
      .def("contains", &FrequencyInterval::contains, py::arg("f_hz"));

  py::class_<GridDistribution>(m, "GridDistribution")
      .def_property_readonly("interval", &GridDistribution::interval)
      .def_property_readonly("size", &GridDistribution::size)
      .def_property_readonly("spacing", &GridDistribution::spacing)
      .def_property_readonly("nodes", &nodes_of)
      .def_property_readonly("weights", [](const GridDistribution& d) {
        return std::vector<double>(d.weights().begin(), d.weights().end());
      });

  m.def("uniform_prior", &uniform_prior, py::arg("interval"),
        py::arg("grid_size") = kDefaultGridSize);
  m.def("gaussian_prior", &gaussian_prior, py::arg("mu_hz"), py::arg("sigma_hz"),
        py::arg("interval"), py::arg("grid_size") = kDefaultGridSize);
  m.def("bayes_update", &bayes_update, py::arg("prior"), py::arg("likelihood_at"));
  m.def("integral", &integral, py::arg("dist"));
  m.def("mean", &mean, py::arg("dist"));
  m.def("stddev", &stddev, py::arg("dist"));
  m.def("entropy", &entropy, py::arg("dist"));
  m.def("regrid", &regrid, py::arg("dist"), py::arg("new_interval"), py::arg("grid_size"));

  py::class_<SignalModel>(m, "SignalModel")
      .def(py::init<>())
      .def_readwrite("f_c_true_hz", &SignalModel::f_c_true_hz)
      .def_readwrite("snr_r", &SignalModel::snr_r)
      .def_readwrite("contrast", &SignalModel::contrast)
      .def_readwrite("shift_model", &SignalModel::shift_model);

  m.def("ramsey_signal", &ramsey_signal, py::arg("f_hz"), py::arg("f_c_hz"), py::arg("f_s_hz"),
        py::arg("t_r_s"));
  m.def("single_particle_likelihood", &single_particle_likelihood, py::arg("u"),
        py::arg("f_c_hz"), py::arg("f_hz"), py::arg("f_s_hz"), py::arg("t_r_s"));
  m.def("gaussian_likelihood", &gaussian_likelihood, py::arg("p_e"), py::arg("f_c_hz"),
        py::arg("f_hz"), py::arg("f_s_hz"), py::arg("t_r_s"), py::arg("snr_r"));
  m.def("simulate_measurement", &simulate_measurement, py::arg("model"), py::arg("f_hz"),
        py::arg("t_r_s"), py::arg("rng"));

  py::class_<CptPhysicalParams>(m, "CptPhysicalParams")
      .def(py::init<>())
      .def_readwrite("rabi_rad_s", &CptPhysicalParams::rabi_rad_s)
      .def_readwrite("decay_rad_s", &CptPhysicalParams::decay_rad_s)
      .def_readwrite("detuning_rad_s", &CptPhysicalParams::detuning_rad_s)
      .def_readwrite("prep_pulse_s", &CptPhysicalParams::prep_pulse_s)
      .def_readwrite("detect_pulse_s", &CptPhysicalParams::detect_pulse_s)
      .def("alpha", &CptPhysicalParams::alpha);
  m.def("cpt_excited_probability", &cpt_excited_probability, py::arg("params"), py::arg("f_hz"),
        py::arg("f_c_hz"), py::arg("f_s_hz"), py::arg("t_r_s"));

  py::class_<Scheme>(m, "Scheme")
      .def(py::init<>())
      .def_readwrite("growth_ratio", &Scheme::growth_ratio)
      .def_readwrite("steps_per_growth", &Scheme::steps_per_growth)
      .def_readwrite("plateau_steps", &Scheme::plateau_steps)
      .def_readwrite("iterations", &Scheme::iterations)
      .def_readwrite("t_min_s", &Scheme::t_min_s)
      .def_readwrite("t_max_s", &Scheme::t_max_s)
      .def("ramp_end", &Scheme::ramp_end);

  py::class_<Schedule>(m, "Schedule")
      .def_readonly("times_s", &Schedule::times_s)
      .def_readonly("scheme", &Schedule::scheme)
      .def_readonly("clamped_indices", &Schedule::clamped_indices)
      .def_readonly("ramp_misaligned", &Schedule::ramp_misaligned);

  m.def("build_schedule", &build_schedule, py::arg("scheme"));
  m.def("total_time", &total_time, py::arg("schedule"));
  m.def("predicted_precision", &predicted_precision, py::arg("scheme"), py::arg("snr_r"));
  m.def("solve_ratio_for_budget", &solve_ratio_for_budget, py::arg("total_s"),
        py::arg("steps_per_growth"), py::arg("t_max_s"));
  m.def("solve_ratio_for_plateau_budget", &solve_ratio_for_plateau_budget, py::arg("total_s"),
        py::arg("plateau_steps"), py::arg("t_max_s"));

  py::class_<IterationCount>(m, "IterationCount")
      .def_readonly("rounded", &IterationCount::rounded)
      .def_readonly("exact", &IterationCount::exact);
  m.def("iteration_count", &iteration_count, py::arg("growth_ratio"), py::arg("steps_per_growth"),
        py::arg("plateau_steps"), py::arg("t_max_s"), py::arg("t_min_s"));
  m.def("iteration_count_for_budget", &iteration_count_for_budget, py::arg("growth_ratio"),
        py::arg("total_s"), py::arg("t_max_s"), py::arg("t_min_s"));
  m.def("fisher_limit_curve", &fisher_limit_curve, py::arg("schedule"), py::arg("snr_r"));

  py::enum_<LoSelection>(m, "LoSelection")
      .value("utility_argmax", LoSelection::utility_argmax)
      .value("mid_fringe", LoSelection::mid_fringe);

  py::class_<BfeConfig>(m, "BfeConfig")
      .def(py::init<>())
      .def_readwrite("scheme", &BfeConfig::scheme)
      .def_readwrite("snr_r", &BfeConfig::snr_r)
      .def_readwrite("initial_interval", &BfeConfig::initial_interval)
      .def_readwrite("initial_center_hz", &BfeConfig::initial_center_hz)
      .def_readwrite("grid_size", &BfeConfig::grid_size)
      .def_readwrite("utility_quadrature_points", &BfeConfig::utility_quadrature_points)
      .def_readwrite("lo_candidate_count", &BfeConfig::lo_candidate_count)
      .def_readwrite("enhancement_enabled", &BfeConfig::enhancement_enabled)
      .def_readwrite("literal_enhancement_trigger", &BfeConfig::literal_enhancement_trigger)
      .def_readwrite("selection", &BfeConfig::selection)
      .def_readwrite("shift_model", &BfeConfig::shift_model)
      .def_readwrite("seed", &BfeConfig::seed);

  py::class_<EstimationStep>(m, "EstimationStep")
      .def_readonly("index", &EstimationStep::index)
      .def_readonly("t_r_s", &EstimationStep::t_r_s)
      .def_readonly("lo_selected_hz", &EstimationStep::lo_selected_hz)
      .def_readonly("lo_freq_hz", &EstimationStep::lo_freq_hz)
      .def_readonly("shift_hz", &EstimationStep::shift_hz)
      .def_readonly("p_e", &EstimationStep::p_e)
      .def_readonly("f_est_hz", &EstimationStep::f_est_hz)
      .def_readonly("df_est_hz", &EstimationStep::df_est_hz)
      .def_readonly("cumulative_time_s", &EstimationStep::cumulative_time_s)
      .def_readonly("interval_width_hz", &EstimationStep::interval_width_hz)
      .def_readonly("norm_error", &EstimationStep::norm_error)
      .def_readonly("degenerate", &EstimationStep::degenerate);

  py::class_<EstimationTrace>(m, "EstimationTrace")
      .def_readonly("steps", &EstimationTrace::steps)
      .def_readonly("schedule", &EstimationTrace::schedule)
      .def_readonly("final_f_est_hz", &EstimationTrace::final_f_est_hz)
      .def_readonly("final_df_est_hz", &EstimationTrace::final_df_est_hz)
      .def_readonly("degenerate_count", &EstimationTrace::degenerate_count);

  m.def("utility", &utility, py::arg("prior"), py::arg("f_hz"), py::arg("t_r_s"),
        py::arg("snr_r"), py::arg("quadrature_points") = 64);
  m.def("select_lo_frequency", &select_lo_frequency, py::arg("prior"), py::arg("t_r_s"),
        py::arg("snr_r"), py::arg("candidate_count") = 128, py::arg("quadrature_points") = 64);
  m.def("random_enhancement", &random_enhancement, py::arg("f_hz"), py::arg("delta_f_est_hz"),
        py::arg("rng"));
  m.def("bfe_run", &bfe_run, py::arg("config"), py::arg("measure"),
        py::call_guard<py::gil_scoped_release>());
  m.def("bfe_run_simulated", &bfe_run_simulated, py::arg("config"), py::arg("model"),
        py::arg("measurement_rng"), py::call_guard<py::gil_scoped_release>());

  py::class_<LoModel>(m, "LoModel")
      .def(py::init<>())
      .def_readwrite("offset_hz", &LoModel::offset_hz)
      .def_readwrite("white_fm_sigma_1s", &LoModel::white_fm_sigma_1s)
      .def_readwrite("drift_hz_per_s", &LoModel::drift_hz_per_s)
      .def_readwrite("nominal_hz", &LoModel::nominal_hz);

  py::class_<PidGains>(m, "PidGains")
      .def(py::init<>())
      .def_readwrite("kp", &PidGains::kp)
      .def_readwrite("ki", &PidGains::ki)
      .def_readwrite("kd", &PidGains::kd);

  py::class_<LockCycle>(m, "LockCycle")
      .def_readonly("index", &LockCycle::index)
      .def_readonly("time_s", &LockCycle::time_s)
      .def_readonly("delta_nu_hz", &LockCycle::delta_nu_hz)
      .def_readonly("correction_hz", &LockCycle::correction_hz);

  py::class_<LockTrace>(m, "LockTrace")
      .def_readonly("cycles", &LockTrace::cycles)
      .def_readonly("cycle_s", &LockTrace::cycle_s)
      .def_readonly("method", &LockTrace::method);

  m.def("lo_evolve", &lo_evolve, py::arg("lo"), py::arg("dt_s"), py::arg("rng"));
  m.def("pid_error", &pid_error, py::arg("s_plus"), py::arg("s_minus"), py::arg("t_r_s"),
        py::arg("amplitude"));
  m.def("run_pid_lock", &run_pid_lock, py::arg("lo"), py::arg("model"), py::arg("t_r_s"),
        py::arg("gains"), py::arg("cycles"), py::arg("rng"),
        py::call_guard<py::gil_scoped_release>());
  m.def("run_bfe_lock", &run_bfe_lock, py::arg("lo"), py::arg("model"), py::arg("config"),
        py::arg("cycles"), py::arg("rng"), py::call_guard<py::gil_scoped_release>());

  py::class_<FractionalSeries>(m, "FractionalSeries")
      .def(py::init<>())
      .def_readwrite("samples", &FractionalSeries::samples)
      .def_readwrite("tau0_s", &FractionalSeries::tau0_s);

  py::class_<AllanPoint>(m, "AllanPoint")
      .def_readonly("tau_s", &AllanPoint::tau_s)
      .def_readonly("adev", &AllanPoint::adev)
      .def_readonly("adev_err", &AllanPoint::adev_err)
      .def_readonly("valid", &AllanPoint::valid)
      .def_readonly("error", &AllanPoint::error);

  py::class_<LogLogFit>(m, "LogLogFit")
      .def_readonly("slope", &LogLogFit::slope)
      .def_readonly("intercept", &LogLogFit::intercept)
      .def_readonly("rms_residual", &LogLogFit::rms_residual);

  m.def(
      "allan_deviation",
      [](const FractionalSeries& series, const std::vector<double>& taus) {
        return allan_deviation(series, taus);
      },
      py::arg("series"), py::arg("taus"));
  m.def("default_taus", &default_taus, py::arg("series"));
  m.def(
      "fit_loglog_slope",
      [](const std::vector<double>& x, const std::vector<double>& y) {
        return fit_loglog_slope(x, y, 0, x.empty() ? 0 : x.size() - 1);
      },
      py::arg("x"), py::arg("y"));
  m.def("improvement_db", &improvement_db, py::arg("sigma_a"), py::arg("sigma_b"));
}

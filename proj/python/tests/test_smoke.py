"""Smoke tests for the bfe_core extension module.

Run directly (PYTHONPATH must contain the built module) or via ctest.
"""

import math
import sys

import bfe_core as bfe


def check(condition, message):
    if not condition:
        raise AssertionError(message)


def test_posterior_basics():
    interval = bfe.FrequencyInterval(-3000.0, 2000.0)
    prior = bfe.uniform_prior(interval, 2048)
    check(abs(bfe.integral(prior) - 1.0) < 1e-9, "uniform prior integrates to one")
    check(abs(prior.weights[0] - 1.0 / 5000.0) < 1e-18, "uniform density is 1/width")

    unit = bfe.uniform_prior(bfe.FrequencyInterval(0.0, 1.0), 1024)
    check(abs(bfe.mean(unit) - 0.5) < 1e-9, "uniform mean")
    check(abs(bfe.stddev(unit) - 1.0 / math.sqrt(12.0)) < 1e-5, "uniform stddev")

    posterior = bfe.bayes_update(unit, lambda f: f)
    check(abs(posterior.weights[512] - 2.0 * posterior.nodes[512]) < 1e-9, "linear update")


def test_signal_and_schedule():
    check(bfe.ramsey_signal(10.0, 10.0, 0.0, 0.02) == 1.0, "fringe peak")
    check(
        abs(bfe.single_particle_likelihood(0, 10.0, 10.0, 0.0, 0.02)) < 1e-15,
        "complementary outcome",
    )

    scheme = bfe.Scheme()
    scheme.growth_ratio = 1.25
    scheme.steps_per_growth = 1
    scheme.plateau_steps = 6
    scheme.iterations = 13
    scheme.t_max_s = 0.020
    schedule = bfe.build_schedule(scheme)
    check(abs(bfe.total_time(schedule) - 0.19902848) < 1e-9, "199 ms total")
    check(abs(bfe.predicted_precision(scheme, 1540.0) - 0.0689) < 0.02, "precision scale")
    check(abs(bfe.improvement_db(1.4e-11, 4.3e-12) - 5.13) < 0.01, "5.1 dB comparison")


def test_estimation_run():
    scheme = bfe.Scheme()
    scheme.growth_ratio = 1.25
    scheme.steps_per_growth = 1
    scheme.plateau_steps = 0
    scheme.iterations = 12
    scheme.t_max_s = 0.020

    config = bfe.BfeConfig()
    config.scheme = scheme
    config.snr_r = 1540.0
    config.grid_size = 512
    config.utility_quadrature_points = 16
    config.lo_candidate_count = 32
    config.seed = 5

    model = bfe.SignalModel()
    model.f_c_true_hz = 3.0
    model.snr_r = 1540.0

    rng = bfe.Rng(17)
    trace = bfe.bfe_run_simulated(config, model, rng)
    check(len(trace.steps) == 12, "one record per iteration")
    err = abs(trace.final_f_est_hz - model.f_c_true_hz)
    check(err < 5.0 * trace.final_df_est_hz, "estimate consistent with its uncertainty")
    check(all(s.norm_error < 1e-9 for s in trace.steps), "posterior stays normalized")

    # Python-side measurement injection through the same driver.
    noiseless = bfe.bfe_run(config, lambda f, t: bfe.ramsey_signal(f, 3.0, 0.0, t))
    check(abs(noiseless.final_f_est_hz - 3.0) < 0.05, "noiseless injection converges")


def test_locking():
    model = bfe.SignalModel()
    model.f_c_true_hz = 0.0
    model.snr_r = 1e9  # effectively noiseless
    lo = bfe.LoModel()
    lo.offset_hz = 1.0
    rng = bfe.Rng(3)
    trace = bfe.run_pid_lock(lo, model, 0.02, bfe.PidGains(), 30, rng)
    check(trace.method == "pid", "method label")
    check(len(trace.cycles) == 30, "one record per cycle")
    check(abs(trace.cycles[-1].delta_nu_hz) < 1e-3, "lock captures the offset")
    check(abs(bfe.pid_error(0.51, 0.50, 0.02, 0.5) - 0.25) < 1e-12, "error-signal arithmetic")


def test_allan():
    series = bfe.FractionalSeries()
    series.tau0_s = 1.0
    series.samples = [1e-11 if k % 2 == 0 else -1e-11 for k in range(64)]
    points = bfe.allan_deviation(series, bfe.default_taus(series))
    check(points[0].valid and points[0].adev > 0.0, "alternating series has a deviation")

    constant = bfe.FractionalSeries()
    constant.tau0_s = 1.0
    constant.samples = [2.0e-12] * 32
    for p in bfe.allan_deviation(constant, bfe.default_taus(constant)):
        check(p.valid and p.adev == 0.0, "constant series has zero deviation")


def main():
    tests = [
        test_posterior_basics,
        test_signal_and_schedule,
        test_estimation_run,
        test_locking,
        test_allan,
    ]
    for test in tests:
        test()
        print(f"ok {test.__name__}")
    print(f"{len(tests)} smoke tests passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())

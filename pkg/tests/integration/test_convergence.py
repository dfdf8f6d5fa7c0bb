"""Integration tests for Euler trial runs and the convergence experiments."""

import math

import numpy as np
import pytest

from sbihari.exceptions import ArgumentError
from sbihari.montecarlo import (
    cauchy_experiment,
    estimate_mean,
    euler_order_ladder,
    is_non_increasing,
    simulate_trials,
    truncation_experiment,
)
from sbihari.objects import LevyConfig
from sbihari.simulation import (
    COMPLETED,
    build_model,
    example43_levy,
    example43_model,
    gbm_model,
    poisson_model,
    unit_poisson_levy,
)

pytestmark = pytest.mark.integration


class TestSimulateTrials:
    """Tests for simulate_trials."""

    def test_poisson_martingale(self):
        """Test that the compensated Poisson model keeps its mean z0."""
        samples = simulate_trials(poisson_model(1.0), unit_poisson_levy(), 16, 1.0, 10_000, 21)
        est = estimate_mean(samples["X_T"])
        assert abs(est.estimate - 1.0) < 4 * est.std_error
        assert np.all(samples["exit_flag"] == COMPLETED)

    def test_shapes_and_paths(self):
        """Test the per-trial arrays and kept paths."""
        samples = simulate_trials(
            example43_model(), example43_levy(), 8, 1.0, 5, 0, keep_paths=True
        )
        assert samples["X_T"].shape == (5,)
        assert samples["paths"].shape == (5, 9, 1)
        assert np.all(samples["sup_abs_X"] >= np.abs(samples["X_T"]))
        assert np.all(samples["cell_remainder"] >= 0.0)

    def test_workers_do_not_change_results(self):
        """Test that the worker count leaves the samples unchanged."""
        a = simulate_trials(example43_model(), example43_levy(), 16, 1.0, 1500, 4, workers=1)
        b = simulate_trials(example43_model(), example43_levy(), 16, 1.0, 1500, 4, workers=3)
        np.testing.assert_array_equal(a["X_T"], b["X_T"])

    def test_capped_runs(self):
        """Test that a small radius caps runs started above R/3."""
        samples = simulate_trials(poisson_model(5.0), unit_poisson_levy(), 8, 1.0, 10, 0, cap_R=3.0)
        assert np.all(samples["exit_flag"] == "CAPPED")
        np.testing.assert_array_equal(samples["X_T"], 5.0)

    @pytest.mark.slow
    def test_gbm_mean(self):
        """Test E[X_T] = e^(a T) for the linear model with 1e5 trials."""
        samples = simulate_trials(gbm_model(), LevyConfig(), 256, 1.0, 100_000, 5, workers=4)
        est = estimate_mean(samples["X_T"])
        assert abs(est.estimate - math.exp(0.05)) < 4 * est.std_error


class TestCauchyExperiment:
    """Tests for cauchy_experiment."""

    def test_zero_model(self):
        """Test that the zero model never exceeds eps."""
        model, levy = build_model("zero", {"z0": 1.0})
        rows = cauchy_experiment(model, levy, [4, 8, 16], 1e-9, 300, 0)
        assert [(row["n"], row["m"]) for row in rows] == [(4, 8), (8, 16)]
        assert all(row["p_exceed"] == 0.0 for row in rows)

    def test_invalid(self):
        """Test eps and ladder validation."""
        model, levy = build_model("zero")
        with pytest.raises(ArgumentError, match="eps"):
            cauchy_experiment(model, levy, [4, 8], 0.0, 10, 0)
        with pytest.raises(ArgumentError, match="at least two"):
            cauchy_experiment(model, levy, [4], 0.1, 10, 0)
        with pytest.raises(ArgumentError, match="n \\| next n"):
            cauchy_experiment(model, levy, [4, 6], 0.1, 10, 0)

    def test_example_model_is_cauchy(self):
        """Test non-increasing exceedance over n in {16, 64, 256}, 2000 trials, eps = 0.1."""
        rows = cauchy_experiment(example43_model(), example43_levy(), [16, 64, 256], 0.1, 2000, 0)
        assert [(row["n"], row["m"]) for row in rows] == [(16, 64), (64, 256)]
        values = [row["p_exceed"] for row in rows]
        ses = [row["std_error"] for row in rows]
        assert is_non_increasing(values, ses)
        assert values[-1] < values[0]

    def test_workers_do_not_change_rows(self):
        """Test that the Cauchy table is the same for any worker count."""
        args = (example43_model(), example43_levy(), [16, 64], 0.1, 2500, 6)
        assert cauchy_experiment(*args, workers=1) == cauchy_experiment(*args, workers=3)


class TestTruncationExperiment:
    """Tests for truncation_experiment."""

    def test_radii(self):
        """Test that a tiny radius caps every run and a huge one none."""
        rows = truncation_experiment(
            poisson_model(1.0), unit_poisson_levy(), 16, [0.3, 1e6], 200, 0
        )
        assert [row["R"] for row in rows] == [0.3, 1e6]
        assert rows[0]["p_capped"] == 1.0
        assert rows[1]["p_capped"] == 0.0

    def test_invalid(self):
        """Test non-positive radii."""
        with pytest.raises(ArgumentError, match="positive radii"):
            truncation_experiment(poisson_model(), unit_poisson_levy(), 16, [0.0], 10, 0)


class TestEulerOrder:
    """Tests for euler_order_ladder and is_non_increasing."""

    def test_first_order(self):
        """Test that the zero-noise linear model converges with order one."""
        rows = euler_order_ladder([16, 32, 64, 128])
        assert math.isnan(rows[0]["observed_order"])
        assert all(row["observed_order"] >= 0.9 for row in rows[1:])
        assert rows[-1]["X_T"] == pytest.approx(math.e, rel=0.01)

    def test_empty(self):
        """Test that an empty ladder raises ArgumentError."""
        with pytest.raises(ArgumentError):
            euler_order_ladder([])

    def test_is_non_increasing(self):
        """Test the tolerance of the monotonicity check."""
        assert is_non_increasing([0.5, 0.52, 0.1], [0.02, 0.02, 0.02])
        assert not is_non_increasing([0.1, 0.5], [0.01, 0.01])

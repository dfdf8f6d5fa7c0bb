"""Unit tests for the Euler scheme, path views and model presets in sbihari.simulation."""

import math

import numpy as np
import pytest

from sbihari.exceptions import ArgumentError, CoefficientError
from sbihari.objects import CadlagPath, EtaSpec, LevyConfig
from sbihari.simulation import (
    CAPPED,
    COMPLETED,
    PathView,
    RngStream,
    SdeModel,
    build_model,
    constant_history,
    coupled_pair,
    euler_simulate,
    example43_levy,
    example43_model,
    gbm_model,
    generate,
    hypothesis_residuals,
    poisson_model,
    running_sup,
    unit_poisson_levy,
    zero_model,
)
from sbihari.simulation.models import capped_xlogx

pytestmark = pytest.mark.unit


def _constant_diffusion_model(h=0.7, z0=0.5):
    return SdeModel(
        name="constant_h",
        drift=lambda t, view: np.zeros_like(view.current),
        diffusion=lambda t, view: np.full((view.batch, 1, 1), h),
        jump=lambda t, view, xi: np.zeros_like(view.current),
        history=constant_history(z0),
    )


class TestPathView:
    """Tests for PathView."""

    def test_cannot_read_future(self):
        """Test that nodes after the stopping node are unreadable."""
        path = CadlagPath(step=0.25, values=[0.0, 1.0, 2.0, 3.0, 4.0])
        view = PathView.from_path(path, k=2)
        assert view.current[0, 0] == 2.0
        assert view.node(1)[0, 0] == 1.0
        with pytest.raises(ArgumentError, match="after the stopping node"):
            view.node(3)

    def test_initial_segment(self):
        """Test reading the initial segment through negative nodes."""
        path = CadlagPath(
            step=0.5, delay_r=1.0, values=[3.0, 4.0], init_segment=[[1.0], [2.0], [3.0]]
        )
        view = PathView.from_path(path, k=0)
        assert view.node(-2)[0, 0] == 1.0
        assert view.segment.shape == (1, 3, 1)
        with pytest.raises(ArgumentError, match="precedes"):
            view.node(-3)

    def test_history_sup_excludes_current(self):
        """Test that the window sup stops one node before the current node."""
        path = CadlagPath(step=0.25, values=[1.0, -2.0, 0.5, 9.0])
        view = PathView.from_path(path)
        assert view.history_sup(1.0)[0] == pytest.approx(2.0)
        assert view.history_sup(0.25)[0] == pytest.approx(0.5)
        assert view.history_sup(0.0)[0] == 0.0
        assert view.time == pytest.approx(0.75)

    def test_node_out_of_range(self):
        """Test that a stopping node beyond the path is rejected."""
        path = CadlagPath.constant(1.0, step=0.5, n_steps=2)
        with pytest.raises(ArgumentError):
            PathView.from_path(path, k=3)

    def test_running_sup(self):
        """Test the running sup helper."""
        path = CadlagPath(step=0.5, values=[1.0, -3.0, 2.0])
        assert running_sup(path, 0.5) == 3.0


class TestEulerSimulate:
    """Tests for euler_simulate."""

    def test_constant_diffusion_is_scaled_noise(self):
        """Test that f = 0, h constant gives X = z0 + h * B on the nodes."""
        driver = generate(LevyConfig(), 32, 1.0, RngStream(3), batch=4)
        run = euler_simulate(_constant_diffusion_model(), driver)
        expected = 0.5 + 0.7 * np.cumsum(driver.dB[:, :, 0], axis=1)
        np.testing.assert_allclose(run.values[:, 1:, 0], expected, rtol=1e-12, atol=1e-12)
        assert np.all(run.values[:, 0, 0] == 0.5)
        assert np.all(run.exit_flags == COMPLETED)

    def test_coefficients_see_stopped_paths(self):
        """Test that coefficients are called once per cell at t = k/n with k nodes readable."""
        calls = []

        def drift(t, view):
            calls.append((t, view.k))
            with pytest.raises(ArgumentError):
                view.node(view.k + 1)
            return np.ones_like(view.current)

        model = SdeModel(
            drift=drift,
            diffusion=lambda t, view: np.zeros(view.current.shape + (1,)),
            jump=lambda t, view, xi: np.zeros_like(view.current),
            history=constant_history(0.0),
        )
        driver = generate(LevyConfig(), 8, 1.0, RngStream(0))
        run = euler_simulate(model, driver)
        assert [k for _, k in calls] == list(range(8))
        assert all(t == pytest.approx(k / 8) for t, k in calls)
        np.testing.assert_allclose(run.values[0, :, 0], np.arange(9) / 8)

    def test_deterministic(self):
        """Test that equal drivers give bitwise equal runs."""
        driver = generate(example43_levy(), 16, 1.0, RngStream(9), batch=8)
        a = euler_simulate(example43_model(), driver)
        b = euler_simulate(example43_model(), driver)
        np.testing.assert_array_equal(a.values, b.values)

    def test_poisson_model_is_compensated_counts(self):
        """Test X_T = z0 + N_T - rate T for the Poisson martingale."""
        driver = generate(unit_poisson_levy(2.0), 16, 1.0, RngStream(4), batch=50)
        run = euler_simulate(poisson_model(1.0), driver)
        counts = driver.jump_counts[:, :, 0].sum(axis=1)
        np.testing.assert_allclose(run.X_T()[:, 0], 1.0 + counts - 2.0, atol=1e-12)

    def test_cap_stops_trials(self):
        """Test that trials stop at the first node with |X| > R/3 and keep that value."""
        driver = generate(unit_poisson_levy(), 16, 1.0, RngStream(0), batch=3)
        run = euler_simulate(poisson_model(1.0), driver, cap_R=0.3)
        assert np.all(run.exit_flags == CAPPED)
        assert np.all(run.stop_index == 0)
        assert np.all(run.values == 1.0)
        assert run.capped.all()

    def test_large_cap_is_inactive(self):
        """Test that a huge radius never stops a trial."""
        driver = generate(LevyConfig(), 16, 1.0, RngStream(0), batch=3)
        capped = euler_simulate(gbm_model(), driver, cap_R=1e9)
        free = euler_simulate(gbm_model(), driver)
        np.testing.assert_array_equal(capped.values, free.values)
        assert np.all(capped.stop_index == 16)

    def test_nonfinite_coefficient(self):
        """Test that a NaN coefficient raises CoefficientError naming it."""
        model = SdeModel(
            drift=lambda t, view: np.full_like(view.current, np.nan),
            diffusion=lambda t, view: np.zeros(view.current.shape + (1,)),
            jump=lambda t, view, xi: np.zeros_like(view.current),
        )
        driver = generate(LevyConfig(), 4, 1.0, RngStream(0))
        with pytest.raises(CoefficientError) as exc_info:
            euler_simulate(model, driver)
        assert exc_info.value.coefficient == "f"
        assert exc_info.value.time == 0.0

    def test_dimension_mismatch(self):
        """Test that driver and model dimensions must agree."""
        driver = generate(LevyConfig(d=1, m=1), 4, 1.0, RngStream(0))
        with pytest.raises(ArgumentError, match="do not match"):
            euler_simulate(zero_model(d=2, m=1), driver)

    def test_run_accessors(self):
        """Test sup_abs, X_T and path extraction."""
        driver = generate(example43_levy(), 8, 1.0, RngStream(1), batch=2)
        run = euler_simulate(example43_model(z0=2.0), driver)
        assert run.init_segment.shape == (9, 1)
        assert np.all(run.sup_abs(from_minus_r=True) >= 2.0)
        path = run.path(1)
        assert isinstance(path, CadlagPath)
        assert path.delay_r == 1.0
        np.testing.assert_array_equal(path.values, run.values[1])
        assert run.X_T().shape == (2, 1)


class TestCoupledPair:
    """Tests for coupled_pair."""

    def test_factor_one(self):
        """Test that a mesh coupled with itself has distance zero."""
        _, _, distance = coupled_pair(
            example43_model(), example43_levy(), 16, 1, 1.0, RngStream(0), batch=4
        )
        np.testing.assert_array_equal(distance, 0.0)

    def test_zero_model(self):
        """Test that the zero model is identical on every mesh."""
        model, levy = build_model("zero", {"z0": 1.5})
        fine, coarse, distance = coupled_pair(model, levy, 8, 4, 1.0, RngStream(0), batch=3)
        assert fine.n_steps == 32
        assert coarse.n_steps == 8
        np.testing.assert_array_equal(distance, 0.0)

    def test_shared_noise(self):
        """Test that the coarse run of a linear model sees the aggregated noise."""
        model = _constant_diffusion_model(h=1.0, z0=0.0)
        fine, coarse, distance = coupled_pair(model, LevyConfig(), 4, 2, 1.0, RngStream(5))
        np.testing.assert_allclose(fine.values[:, ::2], coarse.values, atol=1e-12)
        assert distance[0] == pytest.approx(0.0, abs=1e-12)


class TestModels:
    """Tests for the model presets."""

    def test_capped_xlogx(self):
        """Test m log(1/m) with m = min(|x|, 1/e)."""
        np.testing.assert_allclose(
            capped_xlogx(np.array([0.0, math.exp(-1.0), -0.1, 5.0])),
            [0.0, math.exp(-1.0), 0.1 * math.log(10.0), math.exp(-1.0)],
        )

    def test_example43_drift_vanishes_at_four(self):
        """Test f = -2 sqrt(4) + 4 = 0 on a flat history at 4."""
        path = CadlagPath.constant(4.0, step=0.25, n_steps=4, delay_r=1.0)
        view = PathView.from_path(path)
        model = example43_model()
        assert model.drift(1.0, view)[0, 0] == pytest.approx(0.0, abs=1e-12)

    def test_example43_diffusion(self):
        """Test h at x = 1/e with zero history, and h = 0 at x = 0."""
        model = example43_model()
        values = [0.0, 0.0, 0.0, 0.0, math.exp(-1.0)]
        view = PathView.from_path(CadlagPath(step=0.25, delay_r=1.0, values=values))
        assert model.diffusion(1.0, view)[0, 0, 0] == pytest.approx(0.84025, abs=1e-5)
        zero_view = PathView.from_path(CadlagPath.constant(0.0, step=0.25, n_steps=4, delay_r=1.0))
        assert model.diffusion(1.0, zero_view)[0, 0, 0] == 0.0

    def test_example43_jump(self):
        """Test that the jump coefficient passes the jump through."""
        view = PathView.from_path(CadlagPath.constant(3.0, step=0.25, n_steps=4, delay_r=1.0))
        g = example43_model().jump(1.0, view, np.array([1.0]))
        assert g[0, 0] == 1.0

    def test_build_model(self):
        """Test resolving presets and their drivers."""
        model, levy = build_model("example43")
        assert model.delay_r == 1.0
        assert levy.total_rate == 1.0
        model, levy = build_model("poisson", {"rate": 3.0, "z0": 2.0})
        assert levy.total_rate == 3.0
        assert levy.sigma == [[0.0]]
        model, levy = build_model("zero", {"d": 2, "m": 3})
        assert (model.d, model.m, levy.d, levy.m) == (2, 3, 2, 3)

    def test_build_model_errors(self):
        """Test unknown presets and parameters."""
        with pytest.raises(ArgumentError, match="Unknown model"):
            build_model("heston")
        with pytest.raises(ArgumentError, match="Invalid parameters"):
            build_model("gbm", {"volatility": 0.3})


class TestHypothesisResiduals:
    """Tests for hypothesis_residuals."""

    @staticmethod
    def _flat(value):
        return CadlagPath.constant(value, step=0.25, n_steps=4, delay_r=1.0)

    def test_zero_model(self):
        """Test that the zero model satisfies the conditions with any envelope."""
        model = zero_model()
        eta = EtaSpec.from_kind("linear")
        pairs = [(self._flat(1.0), self._flat(-2.0)), (self._flat(0.0), self._flat(0.0))]
        result = hypothesis_residuals(model, eta, eta, pairs, K_env=1.0)
        assert result["c1_max_residual"] <= 0.0
        assert result["c2_max_residual"] <= 0.0
        assert "c4_max_residual" not in result

    def test_equal_pair(self):
        """Test that identical paths give a zero monotonicity residual."""
        eta = EtaSpec.from_kind("xlog")
        pair = (self._flat(2.0), self._flat(2.0))
        result = hypothesis_residuals(example43_model(), eta, eta, [pair], 1.0, example43_levy())
        assert result["c1_max_residual"] == pytest.approx(0.0, abs=1e-12)

    def test_example43_monotonicity(self):
        """Test the monotonicity condition of the path-dependent model on random flat pairs."""
        rng = np.random.default_rng(0)
        points = rng.uniform(-10.0, 10.0, size=(200, 2))
        pairs = [(self._flat(a), self._flat(b)) for a, b in points]
        eta1 = EtaSpec.from_kind("xlog")
        eta2 = EtaSpec.from_kind("linear")
        result = hypothesis_residuals(
            example43_model(), eta1, eta2, pairs, 50.0, example43_levy(), K_tilde=1e4
        )
        assert result["c1_max_residual"] <= 0.0
        assert result["c2_max_residual"] <= 0.0
        assert result["c4_max_residual"] <= 0.0

    def test_invalid(self):
        """Test empty probes and a non-positive envelope."""
        eta = EtaSpec.from_kind("linear")
        with pytest.raises(ArgumentError, match="at least one"):
            hypothesis_residuals(zero_model(), eta, eta, [], 1.0)
        with pytest.raises(ArgumentError, match="K_env"):
            hypothesis_residuals(zero_model(), eta, eta, [(self._flat(1.0), self._flat(1.0))], 0.0)

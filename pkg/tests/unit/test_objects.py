"""Unit tests for data objects in sbihari.objects."""

import math

import numpy as np
import pytest
from pydantic import ValidationError

from sbihari.exceptions import ArgumentError
from sbihari.objects import (
    BoundResult,
    CadlagPath,
    EtaSpec,
    IncreasingProcess,
    JumpAtom,
    JumpComponent,
    JumpPoint,
    LevyConfig,
    McEstimate,
    McReport,
    ModelSpec,
    QuadrupleConfig,
    RunConfig,
    ThetaAtom,
    VerifyConfig,
    decide_verdict,
)
from sbihari.transform import GTransform

pytestmark = pytest.mark.unit


class TestEtaSpec:
    """Tests for EtaSpec model."""

    def test_defaults_filled(self):
        """Test that catalog defaults fill missing params."""
        spec = EtaSpec.from_kind("power")
        assert spec.params == {"K": 1.0, "a": 0.5}

    def test_kind_normalized(self):
        """Test that the kind is case-insensitive."""
        assert EtaSpec(kind=" Linear ").kind == "linear"

    def test_flags_by_kind(self):
        """Test the divergence flags resolved from the kind."""
        square = EtaSpec.from_kind("square")
        assert square.osgood_at_zero is True
        assert square.diverges_at_infinity is False

        xarctan = EtaSpec.from_kind("xarctan")
        assert xarctan.osgood_at_zero is True
        assert xarctan.diverges_at_infinity is True

    def test_power_flags_depend_on_exponent(self):
        """Test that power is Osgood only for a = 1."""
        assert EtaSpec.from_kind("power", a=1.0).osgood_at_zero is True
        assert EtaSpec.from_kind("power", a=0.5).osgood_at_zero is False

    def test_contradicting_flag_rejected(self):
        """Test that a fixed-flag kind refuses a contradicting declaration."""
        with pytest.raises(ValidationError, match="contradicts"):
            EtaSpec(kind="square", diverges_at_infinity=True)

    def test_tabulated_flags_derived(self):
        """Test that a positive tabulated eta is never Osgood at zero."""
        params = {"knots": [0.0, 1.0], "values": [1.0, 2.0]}
        spec = EtaSpec(kind="tabulated", params=params)
        assert spec.osgood_at_zero is False
        assert spec.diverges_at_infinity is True
        assert EtaSpec(kind="tabulated", params=params, osgood_at_zero=False) == spec
        with pytest.raises(ValidationError, match="contradicts"):
            EtaSpec(kind="tabulated", params=params, osgood_at_zero=True)

    def test_tabulated_transform_finite_at_zero(self):
        """Test that G(0) of a positive tabulated eta is finite."""
        spec = EtaSpec(kind="tabulated", params={"knots": [0.0, 1.0], "values": [1.0, 1.0]})
        assert GTransform(spec).evaluate(0.0) == pytest.approx(-1.0, rel=1e-8)

    def test_invalid_params(self):
        """Test parameter range checks."""
        with pytest.raises(ValidationError, match="K must be a positive"):
            EtaSpec.from_kind("linear", K=0.0)
        with pytest.raises(ValidationError, match="power exponent"):
            EtaSpec.from_kind("power", a=1.5)

    def test_invalid_tabulated(self):
        """Test knot and value checks of tabulated kinds."""
        with pytest.raises(ValidationError, match="strictly increasing"):
            EtaSpec(kind="tabulated", params={"knots": [1.0, 1.0], "values": [1.0, 2.0]})
        with pytest.raises(ValidationError, match="non-decreasing"):
            EtaSpec(kind="tabulated", params={"knots": [0.0, 1.0], "values": [2.0, 1.0]})
        with pytest.raises(ValidationError, match=">= 2 knots"):
            EtaSpec(kind="tabulated", params={"knots": [0.0], "values": [1.0]})

    def test_unknown_kind(self):
        """Test that unknown kinds are rejected."""
        with pytest.raises(ValidationError):
            EtaSpec(kind="cubic")

    def test_to_dict(self):
        """Test conversion to dictionary."""
        result = EtaSpec.from_kind("linear", K=2.0).to_dict()
        assert result["kind"] == "linear"
        assert result["params"]["K"] == 2.0


class TestIncreasingProcess:
    """Tests for IncreasingProcess model."""

    def test_value_with_density_and_jump(self):
        """Test A(t) = density * t + jumps at times <= t."""
        A = IncreasingProcess(density=2.0, jumps=[JumpPoint(time=0.5, size=1.0)])
        assert A.value(0.25) == pytest.approx(0.5)
        assert A.value(0.5) == pytest.approx(2.0)
        assert A.value(1.0) == pytest.approx(3.0)
        assert A.value(0.0) == 0.0

    def test_theta_scales_value(self):
        """Test that the random scale multiplies the value."""
        A = IncreasingProcess(density=1.0)
        assert A.value(2.0, theta=3.0) == pytest.approx(6.0)

    def test_values_on_and_increments(self):
        """Test grid values and their increments."""
        A = IncreasingProcess(density=1.0, jumps=[JumpPoint(time=0.5, size=1.0)])
        np.testing.assert_allclose(A.values_on(np.array([0.0, 0.5, 1.0])), [0.0, 1.5, 2.0])
        np.testing.assert_allclose(A.grid_increments(0.25, 4), [0.25, 1.25, 0.25, 0.25])

    def test_theta_law(self):
        """Test the random-scale law and its mean."""
        A = IncreasingProcess(
            theta_law=[ThetaAtom(value=0.5, prob=0.5), ThetaAtom(value=2.0, prob=0.5)]
        )
        assert A.is_random
        assert A.theta_mean() == pytest.approx(1.25)
        assert not IncreasingProcess().is_random
        assert IncreasingProcess().theta_mean() == 1.0

    def test_law_must_sum_to_one(self):
        """Test that a defective law is rejected."""
        with pytest.raises(ValidationError, match="sum to 1"):
            IncreasingProcess(theta_law=[ThetaAtom(value=1.0, prob=0.5)])

    def test_invalid_jump(self):
        """Test that jumps at time 0 or of negative size are rejected."""
        with pytest.raises(ValidationError):
            JumpPoint(time=0.0, size=1.0)
        with pytest.raises(ValidationError):
            JumpPoint(time=1.0, size=-1.0)


class TestQuadrupleConfig:
    """Tests for QuadrupleConfig model."""

    def test_defaults(self):
        """Test default quadruple settings."""
        cfg = QuadrupleConfig()
        assert cfg.eta.kind == "linear"
        assert cfg.n_steps == 256
        assert cfg.step == pytest.approx(1 / 256)
        assert cfg.dynamics == "SUP"

    def test_dynamics_case_insensitive(self):
        """Test that lower-case dynamics codes are accepted."""
        assert QuadrupleConfig(dynamics="nosup").dynamics == "NOSUP"

    def test_misaligned_horizon(self):
        """Test that T * n must be an integer."""
        with pytest.raises(ValidationError, match="not aligned"):
            QuadrupleConfig(T=1.5, n_per_unit=3)

    def test_H_law_moments(self):
        """Test the mean and p-norm of a random H."""
        cfg = QuadrupleConfig(
            H_law=[ThetaAtom(value=1.0, prob=0.5), ThetaAtom(value=9.0, prob=0.5)]
        )
        assert cfg.H_is_random
        assert cfg.H_mean() == pytest.approx(5.0)
        assert cfg.H_p_norm(0.5) == pytest.approx(4.0)

    def test_constant_H_norm(self):
        """Test that a constant H is its own norm."""
        cfg = QuadrupleConfig(H=2.0)
        assert cfg.H_mean() == 2.0
        assert cfg.H_p_norm(0.5) == 2.0


class TestCadlagPath:
    """Tests for CadlagPath model."""

    def test_constant_path(self):
        """Test the constant path constructor and default initial segment."""
        path = CadlagPath.constant(2.0, step=0.25, n_steps=4, delay_r=1.0)
        assert path.values.shape == (5, 1)
        assert path.init_segment.shape == (5, 1)
        assert path.horizon == pytest.approx(1.0)
        assert np.all(path.init_segment == 2.0)

    def test_values_must_be_finite(self):
        """Test that non-finite values are rejected."""
        with pytest.raises(ValidationError, match="finite"):
            CadlagPath(step=0.5, values=[0.0, math.inf])

    def test_bad_init_segment_shape(self):
        """Test that the initial segment must cover [-r, 0]."""
        with pytest.raises(ValidationError, match="init_segment"):
            CadlagPath(step=0.5, delay_r=1.0, values=[0.0, 1.0], init_segment=[0.0, 0.0])

    def test_value_at_and_left_limit(self):
        """Test right-continuous reading and left limits."""
        path = CadlagPath(step=0.5, values=[1.0, 3.0, 2.0], init_segment=[[0.5]])
        assert path.value_at(0.75)[0] == 3.0
        assert path.value_at(1.0)[0] == 2.0
        assert path.left_limit(2)[0] == 3.0
        assert path.left_limit(0)[0] == 0.5

    def test_node_index_outside_horizon(self):
        """Test that times outside [0, T] raise ArgumentError."""
        path = CadlagPath.constant(1.0, step=0.5, n_steps=2)
        with pytest.raises(ArgumentError, match="outside"):
            path.node_index(-0.1)
        with pytest.raises(ArgumentError, match="outside"):
            path.node_index(1.5)

    def test_running_sup(self):
        """Test running sup over [0, t] and over [-r, t]."""
        path = CadlagPath(
            step=0.5, delay_r=0.5, values=[1.0, -3.0, 2.0], init_segment=[[5.0], [1.0]]
        )
        assert path.running_sup(0.0) == 1.0
        assert path.running_sup(1.0) == 3.0
        assert path.running_sup(0.0, from_minus_r=True) == 5.0
        np.testing.assert_allclose(path.running_sup_series(), [1.0, 3.0, 3.0])

    def test_to_dict(self):
        """Test conversion to dictionary."""
        result = CadlagPath.constant(1.0, step=0.5, n_steps=2).to_dict()
        assert result["values"] == [[1.0], [1.0], [1.0]]
        assert result["step"] == 0.5


class TestLevyConfig:
    """Tests for LevyConfig model."""

    def test_defaults(self):
        """Test the default scalar Brownian driver."""
        config = LevyConfig()
        assert config.total_rate == 0.0
        xi, rates = config.atom_table()
        assert xi.shape == (0, 1)
        assert rates.size == 0

    def test_atom_table_and_compensator(self):
        """Test flattening of components into per-atom rates."""
        config = LevyConfig(
            jumps=[
                JumpComponent(
                    rate=2.0,
                    atoms=[JumpAtom(xi=[1.0], prob=0.25), JumpAtom(xi=[-0.5], prob=0.75)],
                )
            ]
        )
        xi, rates = config.atom_table()
        np.testing.assert_allclose(rates, [0.5, 1.5])
        assert config.total_rate == 2.0
        np.testing.assert_allclose(config.compensator_rate(), [0.5 - 0.75])

    def test_dimension_mismatch(self):
        """Test that b and sigma must match d and m."""
        with pytest.raises(ValidationError, match="b must have length"):
            LevyConfig(d=2)
        with pytest.raises(ValidationError, match="sigma"):
            LevyConfig(d=1, m=2)

    def test_jump_cap(self):
        """Test that atoms beyond the cap are rejected."""
        with pytest.raises(ValidationError, match="cap"):
            LevyConfig(jumps=[JumpComponent(rate=1.0, atoms=[JumpAtom(xi=[2.0], prob=1.0)])])


class TestVerdicts:
    """Tests for decide_verdict and McReport."""

    def test_decide_verdict(self):
        """Test the three outcomes of the one-sided test."""
        assert decide_verdict(1.0, 0.1, 2.0) == "PASS"
        assert decide_verdict(3.0, 0.1, 2.0) == "FAIL"
        assert decide_verdict(2.0, 0.1, 2.0) == "INCONCLUSIVE"

    def test_infinite_error_is_inconclusive(self):
        """Test that an infinite standard error never decides."""
        assert decide_verdict(1.0, math.inf, 2.0) == "INCONCLUSIVE"

    def test_report_from_estimate(self):
        """Test that slack is added to the bound."""
        estimate = McEstimate(estimate=1.05, std_error=0.001, n_trials=100)
        report = McReport.from_estimate("q", estimate, 1.0, slack=0.1)
        assert report.verdict == "PASS"
        assert report.passed
        assert not report.failed

    def test_report_serializes_infinity(self):
        """Test that an infinite bound is written as 'infinity'."""
        estimate = McEstimate(estimate=1.0, std_error=0.0, n_trials=10)
        report = McReport.from_estimate("q", estimate, math.inf)
        assert report.to_dict()["theoretical_bound"] == "infinity"

    def test_bound_result_serializes_infinity(self):
        """Test that explosion is written as 'infinity'."""
        result = BoundResult(value=math.inf, theorem_tag="t")
        assert result.to_dict()["value"] == "infinity"


class TestRunAndVerifyConfig:
    """Tests for RunConfig, VerifyConfig and ModelSpec."""

    def test_seed_range(self):
        """Test that seeds must be 64-bit unsigned integers."""
        assert RunConfig(subcommand="verify", base_seed=2**64 - 1, workers=1).base_seed == 2**64 - 1
        with pytest.raises(ValidationError):
            RunConfig(subcommand="verify", base_seed=-1, workers=1)

    def test_workers_from_environment(self, monkeypatch):
        """Test the SBIHARI_WORKERS default."""
        monkeypatch.setenv("SBIHARI_WORKERS", "3")
        assert RunConfig(subcommand="verify").workers == 3

    def test_verify_codes(self):
        """Test that CLI codes are accepted for hcase and variant."""
        vc = VerifyConfig(check="THM31", hcase="l1", variant="nosup")
        assert vc.check == "thm31"
        assert vc.hcase == "L1_H"
        assert vc.variant == "NOSUP"

    def test_unknown_check(self):
        """Test that unknown checks are rejected."""
        with pytest.raises(ValidationError, match="unknown check"):
            VerifyConfig(check="thm99")

    def test_ladder_must_increase(self):
        """Test that mesh ladders must be strictly increasing."""
        with pytest.raises(ValidationError, match="strictly increasing"):
            VerifyConfig(check="cauchy", n_list=[64, 16])

    def test_model_spec(self):
        """Test that model presets are validated."""
        assert ModelSpec(model="GBM").model == "gbm"
        with pytest.raises(ValidationError, match="unknown model"):
            ModelSpec(model="heston")

"""Pytest configuration and shared fixtures."""

import json

import pytest

from sbihari.objects import EtaSpec, IncreasingProcess, QuadrupleConfig
from sbihari.transform import GTransform


@pytest.fixture
def linear_eta():
    """eta(x) = x."""
    return EtaSpec.from_kind("linear")


@pytest.fixture
def sqrt_eta():
    """eta(x) = x^(1/2)."""
    return EtaSpec.from_kind("power", K=1.0, a=0.5)


@pytest.fixture
def square_eta():
    """eta(x) = x^2 (finite sup of range G)."""
    return EtaSpec.from_kind("square")


@pytest.fixture
def linear_transform(linear_eta):
    """G(x) = log(x) with anchor c = 1."""
    return GTransform(linear_eta)


@pytest.fixture
def sqrt_transform(sqrt_eta):
    """G(x) = 2 (sqrt(x) - 1) with anchor c = 1."""
    return GTransform(sqrt_eta)


@pytest.fixture
def square_transform(square_eta):
    """G(x) = 1 - 1/x with anchor c = 1."""
    return GTransform(square_eta)


@pytest.fixture
def small_quadruple(linear_eta):
    """A coarse linear quadruple (n = 64) for fast Monte Carlo runs."""
    return QuadrupleConfig(eta=linear_eta, A=IncreasingProcess(density=1.0), H=1.0, n_per_unit=64)


@pytest.fixture
def write_json(tmp_path):
    """Writes a JSON document to a file under tmp_path and returns its path."""

    def _write(payload, name="config.json"):
        path = tmp_path / name
        path.write_text(json.dumps(payload), encoding="utf-8")
        return str(path)

    return _write

"""Driving noise, path-dependent Euler scheme and SDE model presets."""

from .euler import CAPPED, COMPLETED, EulerRun, SdeModel, constant_history, coupled_pair, euler_simulate
from .hypothesis import hypothesis_residuals
from .levy_driver import DriverIncrements, generate, refine_aggregate
from .models import (
    build_model,
    example43_levy,
    example43_model,
    gbm_model,
    poisson_model,
    unit_poisson_levy,
    zero_model,
)
from .paths import PathView, running_sup
from .rng import BLOCK_SIZE, RngStream, map_blocks, trial_blocks

__all__ = [
    "BLOCK_SIZE",
    "CAPPED",
    "COMPLETED",
    "DriverIncrements",
    "EulerRun",
    "PathView",
    "RngStream",
    "SdeModel",
    "build_model",
    "constant_history",
    "coupled_pair",
    "euler_simulate",
    "example43_levy",
    "example43_model",
    "gbm_model",
    "generate",
    "hypothesis_residuals",
    "map_blocks",
    "poisson_model",
    "refine_aggregate",
    "running_sup",
    "trial_blocks",
    "unit_poisson_levy",
    "zero_model",
]

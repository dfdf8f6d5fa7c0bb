"""Euler approximates of path-dependent SDEs with compensated jumps.

Within each cell (k/n, (k+1)/n] the coefficients are evaluated once, on the
paths stopped at k/n:

    X_{k+1} = X_k + f dt + sum_a (N_a - rate_a dt) g(xi_a) + h dB
"""

import logging
from typing import Callable, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from sbihari.exceptions import ArgumentError, CoefficientError
from sbihari.objects import CadlagPath, LevyConfig
from sbihari.simulation.levy_driver import DriverIncrements, generate, refine_aggregate
from sbihari.simulation.paths import PathView
from sbihari.simulation.rng import RngStream

logger = logging.getLogger(__name__)

COMPLETED = "COMPLETED"
CAPPED = "CAPPED"


def constant_history(value) -> Callable[[np.ndarray], np.ndarray]:
    """Initial segment z(t) = value for t in [-r, 0]."""
    row = np.atleast_1d(np.asarray(value, dtype=float))
    return lambda times: np.tile(row, (len(times), 1))


class SdeModel(BaseModel):
    """A path-dependent SDE dX = f dt + int g dN~ + h dB with initial segment z.

    Coefficients are batched: they receive the time and a PathView stopped
    at the cell start and return f (batch, d), h (batch, d, m) and, for a
    jump vector xi (d,), g (batch, d).

    Attributes:
        name: Model name.
        d: State dimension.
        m: Brownian dimension.
        delay_r: Delay r of the initial segment [-r, 0].
        drift: f(t, view).
        diffusion: h(t, view).
        jump: g(t, view, xi).
        history: z(times) for times in [-r, 0], shape (len(times), d).
    """

    name: str = "custom"
    d: int = Field(1, ge=1)
    m: int = Field(1, ge=1)
    delay_r: float = Field(0.0, ge=0)
    drift: Callable
    diffusion: Callable
    jump: Callable
    history: Callable = Field(default_factory=lambda: constant_history(1.0))

    def __repr__(self):
        return f"SdeModel(name='{self.name}', d={self.d}, m={self.m}, r={self.delay_r})"

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)


class EulerRun(BaseModel):
    """The Euler approximates of a batch of trials.

    Attributes:
        step: Grid step 1/n.
        n_per_unit: n.
        delay_r: Delay r.
        init_segment: z on the nodes of [-r, 0], shape (r*n + 1, d).
        values: X on the nodes of [0, T], shape (batch, K + 1, d).
        exit_flags: COMPLETED or CAPPED per trial.
        stop_index: Node at which each trial was stopped (K if completed).
        cap_R: Truncation radius R (trials stop once |X| > R/3).
        cell_remainder: max_k |X_{k+1} - X_k| per trial.
        seed: Base seed of the driver stream, if known.
    """

    step: float
    n_per_unit: int
    delay_r: float
    init_segment: np.ndarray
    values: np.ndarray
    exit_flags: np.ndarray
    stop_index: np.ndarray
    cap_R: Optional[float] = None
    cell_remainder: np.ndarray
    seed: Optional[int] = None

    @property
    def batch(self) -> int:
        return int(self.values.shape[0])

    @property
    def n_steps(self) -> int:
        return int(self.values.shape[1] - 1)

    @property
    def capped(self) -> np.ndarray:
        return self.exit_flags == CAPPED

    def X_T(self) -> np.ndarray:
        """Terminal values, shape (batch, d)."""
        return self.values[:, -1]

    def sup_abs(self, from_minus_r: bool = False) -> np.ndarray:
        """sup |X| over [0, T] (or [-r, T]) per trial."""
        sup = np.max(np.linalg.norm(self.values, axis=2), axis=1)
        if from_minus_r:
            sup = np.maximum(sup, float(np.max(np.linalg.norm(self.init_segment, axis=1))))
        return sup

    def path(self, i: int) -> CadlagPath:
        """Trial i as a CadlagPath."""
        return CadlagPath(
            delay_r=self.delay_r, step=self.step, init_segment=self.init_segment, values=self.values[i]
        )

    def __repr__(self):
        return (
            f"EulerRun(batch={self.batch}, n={self.n_per_unit}, n_steps={self.n_steps}, "
            f"capped={int(np.sum(self.capped))})"
        )

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)


def _checked(value, shape: Tuple[int, ...], t: float, name: str, active: np.ndarray) -> np.ndarray:
    arr = np.broadcast_to(np.asarray(value, dtype=float), shape)
    if not np.all(np.isfinite(arr[active])):
        raise CoefficientError(t, name)
    return arr


def euler_simulate(
    model: SdeModel, driver: DriverIncrements, cap_R: Optional[float] = None, seed: Optional[int] = None
) -> EulerRun:
    """Runs the Euler scheme for every trial of the driver batch.

    Args:
        model: The SDE.
        driver: Noise increments on the grid 1/n.
        cap_R: Truncation radius; a trial stops at its first node with
            |X| > R/3 and keeps that value afterwards.
        seed: Base seed recorded in the run.

    Raises:
        ArgumentError: On dimension mismatches or a delay not aligned with the grid.
        CoefficientError: If a coefficient returns a non-finite value.
    """
    if driver.d != model.d or driver.m != model.m:
        raise ArgumentError(
            f"driver dimensions (d={driver.d}, m={driver.m}) do not match "
            f"model '{model.name}' (d={model.d}, m={model.m})"
        )
    if cap_R is not None and not cap_R > 0:
        raise ArgumentError(f"cap_R={cap_R} must be positive")

    step, batch, d, m = driver.step, driver.batch, model.d, model.m
    n_per_unit = driver.n_per_unit
    n_init = int(round(model.delay_r * n_per_unit)) + 1
    init_times = step * np.arange(-(n_init - 1), 1)
    init_segment = np.asarray(model.history(init_times), dtype=float).reshape(n_init, d)

    offset = n_init - 1
    buffer = np.empty((batch, offset + driver.n_steps + 1, d))
    buffer[:, : offset + 1] = init_segment
    active = np.ones(batch, dtype=bool)
    stop_index = np.full(batch, driver.n_steps)
    threshold = None if cap_R is None else cap_R / 3.0

    if threshold is not None:
        over = np.linalg.norm(buffer[:, offset], axis=1) > threshold
        stop_index[over] = 0
        active &= ~over

    compensation = driver.atom_rates * step
    for k in range(driver.n_steps):
        x = buffer[:, offset + k]
        if not active.any():
            buffer[:, offset + k + 1 :] = x[:, None, :]
            break
        t = k * step
        view = PathView(buffer, offset, k, step)

        f = _checked(model.drift(t, view), (batch, d), t, "f", active)
        h = _checked(model.diffusion(t, view), (batch, d, m), t, "h", active)
        increment = f * step + np.einsum("bdm,bm->bd", h, driver.dB[:, k])
        for a in range(driver.n_atoms):
            g = _checked(model.jump(t, view, driver.atom_xi[a]), (batch, d), t, "g", active)
            increment = increment + (driver.jump_counts[:, k, a] - compensation[a])[:, None] * g

        new = np.where(active[:, None], x + increment, x)
        buffer[:, offset + k + 1] = new
        if threshold is not None:
            over = active & (np.linalg.norm(new, axis=1) > threshold)
            stop_index[over] = k + 1
            active &= ~over

    values = buffer[:, offset:].copy()
    capped = ~active
    flags = np.where(capped, CAPPED, COMPLETED)
    if threshold is not None and capped.any():
        logger.info(f"{int(capped.sum())} of {batch} trial(s) capped at |X| > R/3 = {threshold:g}")
    remainder = np.zeros(batch)
    if driver.n_steps:
        remainder = np.max(np.linalg.norm(np.diff(values, axis=1), axis=2), axis=1)

    return EulerRun(
        step=step,
        n_per_unit=n_per_unit,
        delay_r=model.delay_r,
        init_segment=init_segment,
        values=values,
        exit_flags=flags,
        stop_index=stop_index,
        cap_R=cap_R,
        cell_remainder=remainder,
        seed=seed,
    )


def coupled_pair(
    model: SdeModel,
    config: LevyConfig,
    n: int,
    factor: int,
    T: float,
    stream: RngStream,
    batch: int = 1,
    cap_R: Optional[float] = None,
) -> Tuple[EulerRun, EulerRun, np.ndarray]:
    """Euler approximates at n * factor and at n on the same noise.

    Returns:
        (fine run, coarse run, sup over the common nodes of |X_fine - X_coarse| per trial).
    """
    if n < 1 or factor < 1:
        raise ArgumentError(f"need n >= 1 and factor >= 1, got n={n}, factor={factor}")
    fine_driver = generate(config, n * factor, T, stream, batch)
    coarse_driver = refine_aggregate(fine_driver, factor)
    fine = euler_simulate(model, fine_driver, cap_R, seed=stream.base_seed)
    coarse = euler_simulate(model, coarse_driver, cap_R, seed=stream.base_seed)
    diff = fine.values[:, ::factor] - coarse.values
    distance = np.max(np.linalg.norm(diff, axis=2), axis=1)
    return fine, coarse, distance

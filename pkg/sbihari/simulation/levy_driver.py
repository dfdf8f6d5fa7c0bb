"""Driving noise: Brownian increments and binned compensated Poisson jumps."""

import logging
import math
from typing import List

import numpy as np
from pydantic import BaseModel, ConfigDict

from sbihari.exceptions import ArgumentError
from sbihari.objects import LevyConfig
from sbihari.simulation.rng import RngStream
from sbihari.utils import is_integer_multiple

logger = logging.getLogger(__name__)


class DriverIncrements(BaseModel):
    """Noise increments of a batch of trials on the grid t_k = k * step.

    Jumps are binned to the step in which they occur: jump_counts[b, k, a]
    is the number of jumps of atom a in step k, drawn as independent
    Poisson(rate_a * step) counts, which realizes the compound Poisson law.

    Attributes:
        step: Grid step 1/n.
        n_steps: Number of steps K.
        dB: Brownian increments, shape (batch, K, m), each N(0, step).
        jump_counts: Jump counts, shape (batch, K, n_atoms).
        atom_xi: Jump vectors, shape (n_atoms, d).
        atom_rates: Rates lambda_i * prob of each atom, shape (n_atoms,).
        drift_b: Drift vector b, shape (d,).
        sigma: Diffusion matrix, shape (d, m).
    """

    step: float
    n_steps: int
    dB: np.ndarray
    jump_counts: np.ndarray
    atom_xi: np.ndarray
    atom_rates: np.ndarray
    drift_b: np.ndarray
    sigma: np.ndarray

    @property
    def batch(self) -> int:
        return int(self.dB.shape[0])

    @property
    def d(self) -> int:
        return int(self.drift_b.shape[0])

    @property
    def m(self) -> int:
        return int(self.dB.shape[2])

    @property
    def n_atoms(self) -> int:
        return int(self.atom_rates.shape[0])

    @property
    def n_per_unit(self) -> int:
        return int(round(1.0 / self.step))

    @property
    def times(self) -> np.ndarray:
        return self.step * np.arange(self.n_steps + 1)

    @property
    def compensator_per_step(self) -> np.ndarray:
        """sum_i lambda_i E[xi_i] * step (shape (d,))."""
        if self.n_atoms == 0:
            return np.zeros(self.d)
        return (self.atom_rates @ self.atom_xi) * self.step

    def jump_sum(self) -> np.ndarray:
        """Sum of realized jump vectors per step, shape (batch, K, d)."""
        if self.n_atoms == 0:
            return np.zeros((self.batch, self.n_steps, self.d))
        return self.jump_counts @ self.atom_xi

    def compensated_jumps(self) -> np.ndarray:
        """Realized jumps minus the compensator, per step."""
        return self.jump_sum() - self.compensator_per_step

    def levy_increments(self) -> np.ndarray:
        """b * step + sigma dB + compensated jumps, shape (batch, K, d)."""
        return self.drift_b * self.step + self.dB @ self.sigma.T + self.compensated_jumps()

    def jump_events(self, trial: int, k: int) -> List[np.ndarray]:
        """The realized jump vectors of one trial in step k."""
        events = []
        for a in range(self.n_atoms):
            events.extend([self.atom_xi[a]] * int(self.jump_counts[trial, k, a]))
        return events

    def __repr__(self):
        return (
            f"DriverIncrements(batch={self.batch}, n_steps={self.n_steps}, step={self.step}, "
            f"d={self.d}, m={self.m}, n_atoms={self.n_atoms})"
        )

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)


def generate(
    config: LevyConfig, n_per_unit: int, T: float, stream: RngStream, batch: int = 1
) -> DriverIncrements:
    """Draws the driver increments of `batch` trials on [0, T] with step 1/n_per_unit.

    Gaussians are drawn first (shape (batch, K, m)), then the Poisson counts
    (shape (batch, K, n_atoms)), so the output is a fixed function of the
    stream key.

    Raises:
        ArgumentError: If T * n_per_unit is not an integer or the sizes are invalid.
    """
    if n_per_unit < 1 or batch < 1 or not T > 0:
        raise ArgumentError(f"need n_per_unit >= 1, batch >= 1, T > 0 (got {n_per_unit}, {batch}, {T})")
    if not is_integer_multiple(T, n_per_unit):
        raise ArgumentError(f"T={T} is not aligned with the grid 1/{n_per_unit}")

    n_steps = int(round(T * n_per_unit))
    step = 1.0 / n_per_unit
    xi, rates = config.atom_table()

    dB = stream.normal(math.sqrt(step), (batch, n_steps, config.m))
    if rates.size:
        counts = stream.poisson(rates * step, (batch, n_steps, rates.size))
    else:
        counts = np.zeros((batch, n_steps, 0), dtype=np.int64)

    return DriverIncrements(
        step=step,
        n_steps=n_steps,
        dB=dB,
        jump_counts=counts,
        atom_xi=xi,
        atom_rates=rates,
        drift_b=np.asarray(config.b, dtype=float),
        sigma=np.asarray(config.sigma, dtype=float),
    )


def refine_aggregate(fine: DriverIncrements, factor: int) -> DriverIncrements:
    """Sums consecutive blocks of `factor` fine steps into one coarse step.

    Raises:
        ArgumentError: If factor < 1 or does not divide the number of steps.
    """
    if factor < 1 or fine.n_steps % factor:
        raise ArgumentError(f"factor={factor} does not divide n_steps={fine.n_steps}")
    if factor == 1:
        return fine
    coarse_steps = fine.n_steps // factor
    dB = fine.dB.reshape(fine.batch, coarse_steps, factor, fine.m).sum(axis=2)
    counts = fine.jump_counts.reshape(fine.batch, coarse_steps, factor, fine.n_atoms).sum(axis=2)
    return fine.model_copy(
        update={"step": fine.step * factor, "n_steps": coarse_steps, "dB": dB, "jump_counts": counts}
    )

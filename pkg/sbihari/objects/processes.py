"""Integrator process model using Pydantic."""

from typing import List

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator


class JumpPoint(BaseModel):
    """A jump of the integrator: A jumps by `size` at `time` (right-continuous)."""

    time: float = Field(gt=0)
    size: float = Field(ge=0)

    model_config = ConfigDict(frozen=True)


class ThetaAtom(BaseModel):
    """One atom of a discrete law: `value` with probability `prob`."""

    value: float = Field(ge=0)
    prob: float = Field(gt=0, le=1)

    model_config = ConfigDict(frozen=True)


class IncreasingProcess(BaseModel):
    """A non-decreasing cadlag integrator A with A(0) = 0.

    The deterministic part is a(t) = density * t + sum of the jumps at times <= t.
    If `theta_law` is non-empty, A_t = Theta * a(t) with Theta drawn once per
    trial (at time 0) from the law; otherwise A = a.

    Attributes:
        density: Constant Lebesgue density of the continuous part.
        jumps: Jump times and sizes.
        theta_law: Optional discrete law of the random scale Theta.
    """

    density: float = Field(1.0, ge=0)
    jumps: List[JumpPoint] = Field(default_factory=list)
    theta_law: List[ThetaAtom] = Field(default_factory=list)

    @field_validator("theta_law")
    @classmethod
    def validate_law(cls, v):
        """Probabilities of the Theta law must sum to one."""
        if v and abs(sum(atom.prob for atom in v) - 1.0) > 1e-9:
            raise ValueError("theta_law probabilities must sum to 1")
        return v

    @property
    def is_random(self) -> bool:
        """True if the integrator carries a random scale."""
        return bool(self.theta_law)

    def value(self, t: float, theta: float = 1.0) -> float:
        """Returns A(t) for a given realisation of the scale Theta."""
        if t <= 0:
            return 0.0
        jumps = sum(j.size for j in self.jumps if j.time <= t)
        return theta * (self.density * t + jumps)

    def values_on(self, times: np.ndarray) -> np.ndarray:
        """Returns the deterministic part a(t) on an array of times."""
        times = np.asarray(times, dtype=float)
        out = self.density * np.clip(times, 0.0, None)
        for jump in self.jumps:
            out = out + jump.size * (times >= jump.time)
        return out

    def grid_increments(self, step: float, n_steps: int) -> np.ndarray:
        """Returns a(t_{k+1}) - a(t_k) on the uniform grid t_k = k * step."""
        times = step * np.arange(n_steps + 1)
        return np.diff(self.values_on(times))

    def theta_mean(self) -> float:
        """E[Theta] (1 for a deterministic integrator)."""
        if not self.theta_law:
            return 1.0
        return float(sum(atom.value * atom.prob for atom in self.theta_law))

    def to_dict(self) -> dict:
        """Returns a dictionary representation of the IncreasingProcess object."""
        return self.model_dump()

    def __repr__(self):
        """Returns a concise string representation of the IncreasingProcess object."""
        return (
            f"IncreasingProcess(density={self.density}, jumps={len(self.jumps)}, "
            f"random={self.is_random})"
        )

    model_config = ConfigDict(frozen=True)

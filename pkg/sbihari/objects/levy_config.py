"""Levy driver configuration model using Pydantic."""

from typing import List, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class JumpAtom(BaseModel):
    """A jump vector xi with its probability within one jump component."""

    xi: List[float]
    prob: float = Field(gt=0, le=1)

    model_config = ConfigDict(frozen=True)


class JumpComponent(BaseModel):
    """A compound Poisson component: jumps at `rate` with sizes drawn from `atoms`."""

    rate: float = Field(gt=0)
    atoms: List[JumpAtom] = Field(min_length=1)

    @field_validator("atoms")
    @classmethod
    def validate_probs(cls, v):
        """Atom probabilities must sum to one."""
        if abs(sum(atom.prob for atom in v) - 1.0) > 1e-9:
            raise ValueError("atom probabilities must sum to 1")
        return v

    model_config = ConfigDict(frozen=True)


class LevyConfig(BaseModel):
    """A Levy process with bounded, finite-activity jumps.

    L_t = b t + sigma B_t + (compensated sum of jumps), B an m-dimensional
    Brownian motion and the jumps a finite sum of compound Poisson components.

    Attributes:
        d: State dimension.
        m: Brownian dimension.
        b: Drift vector (length d).
        sigma: Diffusion matrix (d x m).
        jumps: Compound Poisson components.
        cap: Jump cap c; every atom satisfies 0 < |xi| <= cap.
    """

    d: int = Field(1, ge=1)
    m: int = Field(1, ge=1)
    b: List[float] = Field(default_factory=lambda: [0.0])
    sigma: List[List[float]] = Field(default_factory=lambda: [[1.0]])
    jumps: List[JumpComponent] = Field(default_factory=list)
    cap: float = Field(1.0, gt=0)

    @model_validator(mode="after")
    def validate_dimensions(self):
        """Check vector/matrix shapes and the jump cap."""
        if len(self.b) != self.d:
            raise ValueError(f"b must have length d={self.d}")
        if len(self.sigma) != self.d or any(len(row) != self.m for row in self.sigma):
            raise ValueError(f"sigma must be a {self.d}x{self.m} matrix")
        for i, component in enumerate(self.jumps):
            for atom in component.atoms:
                if len(atom.xi) != self.d:
                    raise ValueError(f"jumps[{i}]: atom xi must have length d={self.d}")
                norm = float(np.linalg.norm(atom.xi))
                if not 0 < norm <= self.cap:
                    raise ValueError(
                        f"jumps[{i}]: atom |xi|={norm:.6g} must lie in (0, cap={self.cap}]"
                    )
        return self

    def atom_table(self) -> Tuple[np.ndarray, np.ndarray]:
        """Flattens all components into (xi array (n_atoms, d), per-atom rates)."""
        xis = [atom.xi for comp in self.jumps for atom in comp.atoms]
        rates = [comp.rate * atom.prob for comp in self.jumps for atom in comp.atoms]
        if not xis:
            return np.zeros((0, self.d)), np.zeros(0)
        return np.asarray(xis, dtype=float), np.asarray(rates, dtype=float)

    @property
    def total_rate(self) -> float:
        """Sum of the jump rates."""
        return float(sum(comp.rate for comp in self.jumps))

    def compensator_rate(self) -> np.ndarray:
        """sum_i lambda_i E[xi_i] per unit time (length d)."""
        xi, rates = self.atom_table()
        if rates.size == 0:
            return np.zeros(self.d)
        return rates @ xi

    def to_dict(self) -> dict:
        """Returns a dictionary representation of the LevyConfig object."""
        return self.model_dump()

    def __repr__(self):
        """Returns a concise string representation of the LevyConfig object."""
        return f"LevyConfig(d={self.d}, m={self.m}, jump_rate={self.total_rate}, cap={self.cap})"

    model_config = ConfigDict(frozen=True)

"""Grid-sampled cadlag path model using Pydantic."""

import math
from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from sbihari.exceptions import ArgumentError


def _as_matrix(value) -> np.ndarray:
    arr = np.asarray(value, dtype=float)
    if arr.ndim == 1:
        arr = arr.reshape(-1, 1)
    if arr.ndim != 2 or arr.shape[0] == 0:
        raise ValueError("path values must be a non-empty (nodes x d) array")
    return arr


class CadlagPath(BaseModel):
    """A right-continuous path sampled on the uniform grid t_k = k * step.

    Between nodes the path is read as piecewise constant, so the left limit
    at node k is the value at node k - 1. The initial segment z holds the
    values on [-r, 0] on the same grid; its last row is z(0).

    Attributes:
        delay_r: Length r of the initial segment.
        step: Grid step 1/n.
        init_segment: z at the nodes -r, ..., 0, shape (r*n + 1, d).
        values: X at the nodes 0, ..., T, shape (K + 1, d).
    """

    delay_r: float = Field(0.0, ge=0)
    step: float = Field(gt=0)
    init_segment: Optional[np.ndarray] = None
    values: np.ndarray

    @field_validator("values", mode="before")
    @classmethod
    def coerce_values(cls, v):
        """Convert to a finite float matrix (one column per dimension)."""
        arr = _as_matrix(v)
        if not np.all(np.isfinite(arr)):
            raise ValueError("path values must be finite")
        return arr

    @field_validator("init_segment", mode="before")
    @classmethod
    def coerce_init(cls, v):
        if v is None:
            return None
        return _as_matrix(v)

    @model_validator(mode="after")
    def validate_segment(self):
        """Fill a missing initial segment with X_0 and check its length."""
        n_init = int(round(self.delay_r / self.step)) + 1
        if self.init_segment is None:
            object.__setattr__(self, "init_segment", np.repeat(self.values[:1], n_init, axis=0))
        if self.init_segment.shape != (n_init, self.values.shape[1]):
            raise ValueError(
                f"init_segment must have shape ({n_init}, {self.values.shape[1]}), "
                f"got {self.init_segment.shape}"
            )
        return self

    @classmethod
    def constant(cls, value: float, step: float, n_steps: int, delay_r: float = 0.0):
        """A constant scalar path on [-r, n_steps * step]."""
        return cls(delay_r=delay_r, step=step, values=np.full(n_steps + 1, float(value)))

    @property
    def d(self) -> int:
        return int(self.values.shape[1])

    @property
    def n_steps(self) -> int:
        return int(self.values.shape[0] - 1)

    @property
    def horizon(self) -> float:
        return self.n_steps * self.step

    @property
    def times(self) -> np.ndarray:
        return self.step * np.arange(self.n_steps + 1)

    def norms(self) -> np.ndarray:
        """Euclidean norm |X| at every node of [0, T]."""
        return np.linalg.norm(self.values, axis=1)

    def node_index(self, t: float) -> int:
        """Index of the last node <= t.

        Raises:
            ArgumentError: If t lies outside [0, T].
        """
        if t < 0 or t > self.horizon * (1 + 1e-12) + 1e-12 or math.isnan(t):
            raise ArgumentError(f"t={t} outside the path horizon [0, {self.horizon}]")
        return min(int(math.floor(t / self.step + 1e-9)), self.n_steps)

    def value_at(self, t: float) -> np.ndarray:
        """X(t) (right-continuous reading)."""
        return self.values[self.node_index(t)]

    def left_limit(self, k: int) -> np.ndarray:
        """X at node k minus: the value at node k - 1 (z(0) for k = 0)."""
        if k <= 0:
            return self.init_segment[-1]
        return self.values[k - 1]

    def running_sup(self, t: float, from_minus_r: bool = False) -> float:
        """max |X| over the nodes in [0, t] (or [-r, t] when from_minus_r).

        Raises:
            ArgumentError: If t lies outside [0, T].
        """
        k = self.node_index(t)
        sup = float(np.max(self.norms()[: k + 1]))
        if from_minus_r:
            sup = max(sup, float(np.max(np.linalg.norm(self.init_segment, axis=1))))
        return sup

    def running_sup_series(self, from_minus_r: bool = False) -> np.ndarray:
        """Running sup at every node (non-decreasing)."""
        series = np.maximum.accumulate(self.norms())
        if from_minus_r:
            series = np.maximum(series, float(np.max(np.linalg.norm(self.init_segment, axis=1))))
        return series

    def to_dict(self) -> dict:
        """Returns a JSON-ready dictionary representation of the path."""
        return {
            "delay_r": self.delay_r,
            "step": self.step,
            "init_segment": self.init_segment.tolist(),
            "values": self.values.tolist(),
        }

    def __repr__(self):
        """Returns a concise string representation of the CadlagPath object."""
        return f"CadlagPath(d={self.d}, step={self.step}, n_steps={self.n_steps}, r={self.delay_r})"

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

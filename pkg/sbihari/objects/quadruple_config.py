"""Test-quadruple configuration model using Pydantic."""

from typing import List, Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

from sbihari.objects.eta_spec import EtaSpec
from sbihari.objects.processes import IncreasingProcess, ThetaAtom
from sbihari.utils import is_integer_multiple

Variant = Literal["SUP", "NOSUP"]


class QuadrupleConfig(BaseModel):
    """Configuration of an equality-dynamics test quadruple (X, A, H, M).

    X_{k+1} = max(floor, X_k + eta(Y_k) dA_k + kappa X_k dB_k), X_0 = max(floor, H),
    with Y = X* (running sup) under SUP dynamics and Y = X under NOSUP dynamics.

    Attributes:
        eta: The nonlinearity.
        A: The integrator (deterministic, or random scale Theta * a(t)).
        H: Constant initial/forcing level, used when `H_law` is empty.
        H_law: Optional discrete law of a per-trial H.
        kappa: Martingale intensity.
        n_per_unit: Grid points per unit time.
        T: Horizon.
        dynamics: 'SUP' or 'NOSUP'.
        floor: Lower clamp of X.
        anchor_c: Anchor c of G.
    """

    eta: EtaSpec = Field(default_factory=lambda: EtaSpec.from_kind("linear"))
    A: IncreasingProcess = Field(default_factory=IncreasingProcess)
    H: float = Field(1.0, ge=0)
    H_law: List[ThetaAtom] = Field(default_factory=list)
    kappa: float = Field(0.5, ge=0)
    n_per_unit: int = Field(256, ge=1)
    T: float = Field(1.0, gt=0)
    dynamics: Variant = "SUP"
    floor: float = Field(0.0, ge=0)
    anchor_c: float = Field(1.0, gt=0)

    @model_validator(mode="before")
    @classmethod
    def normalize_dynamics(cls, data):
        """Accept lower-case dynamics codes ('sup', 'nosup')."""
        if isinstance(data, dict) and isinstance(data.get("dynamics"), str):
            data = {**data, "dynamics": data["dynamics"].strip().upper()}
        return data

    @model_validator(mode="after")
    def validate_grid(self):
        """T * n_per_unit must be an integer and the H law a probability law."""
        if not is_integer_multiple(self.T, self.n_per_unit):
            raise ValueError(f"T={self.T} is not aligned with the grid 1/{self.n_per_unit}")
        if self.H_law and abs(sum(atom.prob for atom in self.H_law) - 1.0) > 1e-9:
            raise ValueError("H_law probabilities must sum to 1")
        return self

    @property
    def n_steps(self) -> int:
        """Number of grid steps on [0, T]."""
        return int(round(self.T * self.n_per_unit))

    @property
    def step(self) -> float:
        """Grid step 1/n."""
        return 1.0 / self.n_per_unit

    @property
    def H_is_random(self) -> bool:
        return bool(self.H_law)

    def H_mean(self) -> float:
        """E[H]."""
        if not self.H_law:
            return self.H
        return float(sum(atom.value * atom.prob for atom in self.H_law))

    def H_p_norm(self, p: float) -> float:
        """||H||_p = E[H^p]^(1/p) (H itself if constant)."""
        if not self.H_law:
            return self.H
        return float(sum(atom.prob * atom.value**p for atom in self.H_law) ** (1.0 / p))

    def to_dict(self) -> dict:
        """Returns a dictionary representation of the QuadrupleConfig object."""
        return self.model_dump()

    def __repr__(self):
        """Returns a concise string representation of the QuadrupleConfig object."""
        return (
            f"QuadrupleConfig(eta={self.eta.kind}, H={self.H}, kappa={self.kappa}, "
            f"n={self.n_per_unit}, T={self.T}, dynamics={self.dynamics})"
        )

    model_config = ConfigDict(frozen=True)

"""Run and verify configuration models using Pydantic."""

import os
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from sbihari.config.codes import CHECK_CODES, HCASE_CODES, VARIANT_CODES, is_check_supported
from sbihari.objects.bound_result import HCase
from sbihari.objects.levy_config import LevyConfig
from sbihari.objects.quadruple_config import QuadrupleConfig, Variant

WORKERS_ENV = "SBIHARI_WORKERS"
MAX_SEED = 2**64 - 1


def default_workers() -> int:
    """Worker count from the SBIHARI_WORKERS environment variable (default 1)."""
    raw = os.environ.get(WORKERS_ENV, "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


class RunConfig(BaseModel):
    """Parsed command-line run: everything needed to reproduce the output.

    Attributes:
        subcommand: CLI subcommand name.
        base_seed: 64-bit unsigned base seed.
        output: Output path (stdout if None).
        workers: Worker threads; affects wall time only.
        flags: The subcommand's remaining parsed flags.
    """

    subcommand: str
    base_seed: int = Field(0, ge=0, le=MAX_SEED)
    output: Optional[str] = None
    workers: int = Field(default_factory=default_workers, ge=1)
    flags: Dict[str, Any] = Field(default_factory=dict)

    def to_dict(self) -> dict:
        """Returns a dictionary representation of the RunConfig object."""
        return self.model_dump()

    model_config = ConfigDict(frozen=True)


class VerifyConfig(BaseModel):
    """Configuration of a `verify` check, loadable from JSON.

    Only the fields a check reads matter; the others keep their defaults.

    Attributes:
        check: Check name (see sbihari.config.codes.CHECK_CODES).
        quadruple: Test quadruple (thm31, cor36, thm38, osgood, gronwall_random_a).
        p: Norm exponent in (0, 1).
        q: Second exponent (q > p for cor36).
        gronwall_q: Exponent 0 < q < p of the linear random-integrator bound.
        hcase: H-case of the concave bound.
        variant: SUP or NOSUP bound.
        trials: Monte Carlo trials.
        ci_level: One-sided confidence level.
        strict_mode: Raise instead of warn when a concavity probe fails.
        gamma: Counterexample jump parameter.
        counter_T: Counterexample horizon (>= 1).
        model: SDE model preset name (see sbihari.config.codes.MODEL_PRESETS).
        model_params: Parameters of the model preset.
        levy: Driver configuration (preset default when None).
        sde_T: SDE horizon.
        n_list: Mesh ladder for cauchy (each dividing the next) and euler_order.
        eps: Cauchy exceedance threshold.
        truncation_n: Mesh of the truncation experiment.
        cap_R_list: Truncation radii.
        delta: Exceedance threshold of the Osgood ladder.
        osgood_n_list: H = 1/n ladder of the Osgood check.
    """

    check: str
    quadruple: QuadrupleConfig = Field(default_factory=QuadrupleConfig)
    p: float = Field(0.5, gt=0, lt=1)
    q: float = Field(1.0, gt=0)
    gronwall_q: float = Field(0.25, gt=0, lt=1)
    hcase: HCase = "PREDICTABLE_H"
    variant: Variant = "SUP"
    trials: int = Field(10_000, ge=1)
    ci_level: float = Field(0.99, gt=0.5, lt=1)
    strict_mode: bool = False
    gamma: float = Field(1.0, gt=0)
    counter_T: float = Field(2.0, ge=1)
    model: str = "example43"
    model_params: Dict[str, Any] = Field(default_factory=dict)
    levy: Optional[LevyConfig] = None
    sde_T: float = Field(1.0, gt=0)
    n_list: List[int] = Field(default_factory=lambda: [16, 64, 256])
    eps: float = Field(0.1, gt=0)
    truncation_n: int = Field(64, ge=1)
    cap_R_list: List[float] = Field(default_factory=lambda: [3.0, 6.0, 12.0, 24.0])
    delta: float = Field(0.01, gt=0)
    osgood_n_list: List[int] = Field(default_factory=lambda: [1, 10, 100])

    @model_validator(mode="before")
    @classmethod
    def normalize_codes(cls, data):
        """Accept CLI codes ('pred', 'nosup', ...) for hcase and variant."""
        if not isinstance(data, dict):
            return data
        data = dict(data)
        hcase = data.get("hcase")
        if isinstance(hcase, str) and hcase.strip().lower() in HCASE_CODES:
            data["hcase"] = HCASE_CODES[hcase.strip().lower()]
        variant = data.get("variant")
        if isinstance(variant, str) and variant.strip().lower() in VARIANT_CODES:
            data["variant"] = VARIANT_CODES[variant.strip().lower()]
        return data

    @field_validator("check")
    @classmethod
    def validate_check(cls, v):
        """The check must be a supported verify check."""
        v = v.strip().lower()
        if not is_check_supported(v):
            raise ValueError(f"unknown check '{v}', expected one of {sorted(CHECK_CODES)}")
        return v

    @field_validator("n_list", "osgood_n_list")
    @classmethod
    def validate_ladder(cls, v):
        """Mesh ladders must be positive and strictly increasing."""
        if not v or any(n < 1 for n in v) or any(b <= a for a, b in zip(v, v[1:])):
            raise ValueError("ladder must be positive and strictly increasing")
        return v

    def to_dict(self) -> dict:
        """Returns a dictionary representation of the VerifyConfig object."""
        return self.model_dump()

    model_config = ConfigDict(frozen=True)

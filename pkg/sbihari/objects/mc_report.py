"""Monte Carlo estimate and report models using Pydantic."""

import math
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_serializer
from scipy import stats

from sbihari.utils import ext_to_display

Verdict = Literal["PASS", "FAIL", "INCONCLUSIVE"]


class McEstimate(BaseModel):
    """A Monte Carlo point estimate with its standard error."""

    estimate: float
    std_error: float = Field(ge=0)
    n_trials: int = Field(ge=1)

    model_config = ConfigDict(frozen=True)


def decide_verdict(
    estimate: float, std_error: float, bound: float, ci_level: float = 0.99
) -> Verdict:
    """One-sided z-test of `estimate <= bound`.

    PASS iff estimate + z * se <= bound, FAIL iff estimate - z * se > bound,
    otherwise INCONCLUSIVE. z is the standard normal quantile at `ci_level`.
    """
    if math.isnan(estimate) or math.isnan(bound):
        return "INCONCLUSIVE"
    z = float(stats.norm.ppf(ci_level))
    if estimate + z * std_error <= bound:
        return "PASS"
    if estimate - z * std_error > bound:
        return "FAIL"
    return "INCONCLUSIVE"


class McReport(BaseModel):
    """Outcome of one empirical inequality check.

    Attributes:
        quantity_tag: Name of the estimated quantity.
        estimate: Monte Carlo estimate.
        std_error: Its standard error.
        n_trials: Number of trials.
        ci_level: One-sided confidence level of the verdict.
        theoretical_bound: The bound the estimate is compared against.
        slack: Grid-bias slack added to the bound before the test.
        verdict: PASS, FAIL or INCONCLUSIVE.
        seed: Base seed of the run.
        warnings: Non-fatal issues (failed probes, capped runs, ...).
        details: Additional numbers for the report file.
    """

    quantity_tag: str
    estimate: float
    std_error: float = Field(ge=0)
    n_trials: int = Field(ge=1)
    ci_level: float = Field(0.99, gt=0.5, lt=1)
    theoretical_bound: float
    slack: float = Field(0.0, ge=0)
    verdict: Verdict
    seed: int = 0
    warnings: List[str] = Field(default_factory=list)
    details: Dict[str, Any] = Field(default_factory=dict)

    @classmethod
    def from_estimate(
        cls,
        quantity_tag: str,
        estimate: McEstimate,
        bound: float,
        slack: float = 0.0,
        seed: int = 0,
        ci_level: float = 0.99,
        warnings: Optional[List[str]] = None,
        details: Optional[Dict[str, Any]] = None,
    ) -> "McReport":
        """Builds a report and decides its verdict against bound + slack."""
        verdict = decide_verdict(estimate.estimate, estimate.std_error, bound + slack, ci_level)
        return cls(
            quantity_tag=quantity_tag,
            estimate=estimate.estimate,
            std_error=estimate.std_error,
            n_trials=estimate.n_trials,
            ci_level=ci_level,
            theoretical_bound=bound,
            slack=slack,
            verdict=verdict,
            seed=seed,
            warnings=list(warnings or []),
            details=dict(details or {}),
        )

    @field_serializer("theoretical_bound", "estimate", "std_error", "slack")
    def serialize_ext(self, value: float):
        return ext_to_display(value)

    @property
    def passed(self) -> bool:
        return self.verdict == "PASS"

    @property
    def failed(self) -> bool:
        return self.verdict == "FAIL"

    def to_dict(self) -> dict:
        """Returns the JSON-ready dictionary representation of the report."""
        return self.model_dump()

    def __repr__(self):
        """Returns a concise string representation of the McReport object."""
        return (
            f"McReport(quantity_tag='{self.quantity_tag}', estimate={self.estimate:.6g}, "
            f"bound={self.theoretical_bound:.6g}, verdict={self.verdict})"
        )

    model_config = ConfigDict(frozen=True)

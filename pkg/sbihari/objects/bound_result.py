"""Bound result models using Pydantic."""

from typing import List, Literal, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_serializer

from sbihari.utils import ext_to_display

HCase = Literal["PREDICTABLE_H", "NONNEG_JUMPS", "L1_H"]


class PExponents(BaseModel):
    """The sharp constants for an exponent p in (0, 1).

    Attributes:
        p: The exponent.
        beta: (1 - p)^-1.
        alpha1: (1 - p)^(-1/p).
        alpha2: p^-1.
    """

    p: float
    beta: float
    alpha1: float
    alpha2: float

    model_config = ConfigDict(frozen=True)


class BoundResult(BaseModel):
    """A bound value with the formula that produced it.

    Attributes:
        value: The bound (+inf signals explosion).
        theorem_tag: Which formula was applied, with the probe outcome.
        constants_used: (c1 inside G, c2 multiplying A, c3 outer multiplier).
        warnings: Non-fatal issues met while evaluating.
    """

    value: float
    theorem_tag: str
    constants_used: Tuple[float, float, float] = (1.0, 1.0, 1.0)
    warnings: List[str] = Field(default_factory=list)

    @field_serializer("value")
    def serialize_value(self, value: float):
        return ext_to_display(value)

    def to_dict(self) -> dict:
        """Returns the JSON-ready dictionary representation ('infinity' for +inf)."""
        return self.model_dump()

    def __repr__(self):
        """Returns a concise string representation of the BoundResult object."""
        return f"BoundResult(value={self.value}, theorem_tag='{self.theorem_tag}')"

    model_config = ConfigDict(frozen=True)

"""Nonlinearity specification model using Pydantic."""

from typing import Dict, List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

from sbihari.config.codes import ETA_DEFAULT_PARAMS, eta_flags

EtaKind = Literal["linear", "power", "xlog", "square", "xarctan", "tabulated"]


class EtaSpec(BaseModel):
    """A non-decreasing nonlinearity eta with its divergence metadata.

    Attributes:
        kind: Catalog kind ('linear', 'power', 'xlog', 'square', 'xarctan', 'tabulated').
        params: Kind parameters. Scalars (K, a) for the closed forms, lists
            ('knots', 'values') for 'tabulated'.
        osgood_at_zero: True if int_0^eps du/eta(u) = +inf.
        diverges_at_infinity: True if int_1^inf du/eta(u) = +inf.
    """

    kind: EtaKind
    params: Dict[str, Union[float, List[float]]] = Field(default_factory=dict)
    osgood_at_zero: bool = False
    diverges_at_infinity: bool = True

    @model_validator(mode="before")
    @classmethod
    def fill_defaults_and_flags(cls, data):
        """Merge default params and resolve the divergence flags of the kind."""
        if not isinstance(data, dict):
            return data
        data = dict(data)
        kind = data.get("kind")
        if isinstance(kind, str):
            kind = kind.strip().lower()
            data["kind"] = kind
        if kind not in ETA_DEFAULT_PARAMS:
            return data  # Literal validation reports the bad kind

        params = {**ETA_DEFAULT_PARAMS[kind], **(data.get("params") or {})}
        data["params"] = params
        osgood, diverges = eta_flags(kind, params)

        for flag, value in (("osgood_at_zero", osgood), ("diverges_at_infinity", diverges)):
            declared = data.get(flag)
            if declared is None:
                data[flag] = value
            elif bool(declared) != value:
                raise ValueError(f"{flag}={declared} contradicts kind '{kind}' (must be {value})")
        return data

    @model_validator(mode="after")
    def validate_params(self):
        """Check parameter ranges per kind."""
        params = self.params
        if self.kind == "tabulated":
            knots = params.get("knots")
            values = params.get("values")
            if not isinstance(knots, list) or not isinstance(values, list):
                raise ValueError("tabulated eta needs list params 'knots' and 'values'")
            if len(knots) != len(values) or len(knots) < 2:
                raise ValueError("tabulated eta needs >= 2 knots and as many values")
            if any(b <= a for a, b in zip(knots, knots[1:])) or knots[0] < 0:
                raise ValueError("tabulated knots must be non-negative and strictly increasing")
            if any(b < a for a, b in zip(values, values[1:])):
                raise ValueError("tabulated values must be non-decreasing")
            if values[0] <= 0:
                raise ValueError("tabulated values must be positive")
            return self

        K = params.get("K")
        if not isinstance(K, (int, float)) or K <= 0:
            raise ValueError(f"parameter K must be a positive real, got {K!r}")
        if self.kind == "power":
            a = params.get("a")
            if not isinstance(a, (int, float)) or not 0 < a <= 1:
                raise ValueError(f"power exponent a must lie in (0, 1], got {a!r}")
        return self

    @classmethod
    def from_kind(cls, kind: str, **params) -> "EtaSpec":
        """Builds a catalog spec, e.g. EtaSpec.from_kind('power', K=2, a=0.5)."""
        return cls(kind=kind, params=params)

    def to_dict(self) -> dict:
        """Returns the JSON-ready dictionary representation of the nonlinearity."""
        return self.model_dump()

    def __repr__(self):
        """Returns a concise string representation of the EtaSpec object."""
        return f"EtaSpec(kind='{self.kind}', params={self.params})"

    model_config = ConfigDict(frozen=True)

"""SDE model file model using Pydantic."""

from typing import Any, Dict, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from sbihari.config.codes import MODEL_PRESETS
from sbihari.objects.levy_config import LevyConfig


class ModelSpec(BaseModel):
    """A model preset with its parameters, as read from a JSON model file.

    Attributes:
        model: Preset name (see sbihari.config.codes.MODEL_PRESETS).
        params: Preset parameters.
        levy: Driver configuration; the preset's own driver when None.
    """

    model: str
    params: Dict[str, Any] = Field(default_factory=dict)
    levy: Optional[LevyConfig] = None

    @field_validator("model")
    @classmethod
    def validate_model(cls, v):
        """The model must be a known preset."""
        v = v.strip().lower()
        if v not in MODEL_PRESETS:
            raise ValueError(f"unknown model '{v}', expected one of {sorted(MODEL_PRESETS)}")
        return v

    def to_dict(self) -> dict:
        """Returns a dictionary representation of the ModelSpec object."""
        return self.model_dump()

    model_config = ConfigDict(frozen=True)

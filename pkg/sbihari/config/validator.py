"""Structural validation of JSON config documents.

These checks run before the pydantic models parse a document: they catch
wrong top-level types, missing required keys and unknown keys, and report
all of them at once.
"""

import logging
from typing import Any, Dict, List, Tuple, Type

from pydantic import BaseModel

logger = logging.getLogger(__name__)


def required_keys(model: Type[BaseModel]) -> List[str]:
    """Names of the fields of `model` without a default."""
    return [name for name, field in model.model_fields.items() if field.is_required()]


def validate_config_structure(data: Any, model: Type[BaseModel]) -> Tuple[bool, List[str]]:
    """Validates the structural requirements of a config document for `model`.

    Checks for:
    - The document is a JSON object
    - Every required field of the model is present
    - No key is unknown to the model

    Args:
        data: The decoded JSON document.
        model: The pydantic model the document describes.

    Returns:
        Tuple of (is_valid, error_messages).
    """
    errors = []

    if not isinstance(data, dict):
        errors.append(f"Config must be a JSON object, got {type(data).__name__}")
        return False, errors

    for key in required_keys(model):
        if key not in data:
            errors.append(f"Missing required key '{key}'")

    known = set(model.model_fields)
    for key in data:
        if key not in known:
            errors.append(f"Unknown key '{key}'")

    if errors:
        logger.error(f"Config structure validation failed: {'; '.join(errors)}")
        return False, errors

    return True, []


def nested_error_key(loc: Tuple[Any, ...]) -> str:
    """Dotted key path of a pydantic error location, e.g. 'quadruple.eta.params'."""
    return ".".join(str(part) for part in loc) if loc else ""


def first_error(errors: List[Dict[str, Any]]) -> Tuple[str, str]:
    """(key path, message) of the first pydantic error."""
    if not errors:
        return "", "invalid config"
    err = errors[0]
    return nested_error_key(tuple(err.get("loc", ()))), str(err.get("msg", "invalid value"))

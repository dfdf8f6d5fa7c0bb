"""Loading JSON configs into sbihari models.

`ConfigFile` reads a JSON file, validates its structure and parses it into a
pydantic model. Every failure surfaces as a ConfigError naming the file
and, when known, the offending key.
"""

import json
import logging
import os
from typing import Any, Generic, List, Tuple, Type, TypeVar

from pydantic import BaseModel, ValidationError

from sbihari.config.codes import is_eta_kind_supported
from sbihari.config.validator import first_error, validate_config_structure
from sbihari.exceptions import ConfigError
from sbihari.objects import EtaSpec, VerifyConfig

logger = logging.getLogger(__name__)

M = TypeVar("M", bound=BaseModel)


def parse_model(data: Any, model: Type[M], path: str = None) -> M:
    """Parses decoded JSON into `model`.

    Raises:
        ConfigError: With the key path of the first validation error.
    """
    try:
        return model.model_validate(data)
    except ValidationError as e:
        key, msg = first_error(e.errors())
        raise ConfigError(msg, path=path, key=key or None) from e


def read_json(file_name: str) -> Any:
    """Decodes a JSON file.

    Raises:
        ConfigError: If the file is missing or is not valid JSON.
    """
    try:
        with open(file_name, "r", encoding="utf-8") as f:
            return json.load(f)
    except FileNotFoundError as e:
        logger.error(f"Config file not found: {file_name}")
        raise ConfigError("file not found", path=file_name) from e
    except json.JSONDecodeError as e:
        logger.error(f"Malformed JSON in {file_name}: {e}")
        raise ConfigError(
            f"malformed JSON at line {e.lineno}, column {e.colno}: {e.msg}", path=file_name
        ) from e


def parse_config(
    data: Any, model: Type[M], path: str = None, strict_mode: bool = False
) -> Tuple[M, List[str]]:
    """Validates the structure of a decoded document, then parses it into `model`.

    Structural problems raise with strict_mode (or when the document is not
    an object) and are logged otherwise.

    Returns:
        Tuple of (parsed model, structural error messages).

    Raises:
        ConfigError: On structural errors (see above) or parse failures.
    """
    valid, errors = validate_config_structure(data, model)
    if not valid:
        if strict_mode or not isinstance(data, dict):
            raise ConfigError("; ".join(errors), path=path)
        logger.warning(f"{len(errors)} structural issue(s) in {path}; parsing will continue")
    return parse_model(data, model, path), errors


class ConfigFile(Generic[M]):
    """
    Reads a JSON config file into a pydantic model.

    Args:
        file_name: Path to the JSON file.
        strict_mode: If True, structural problems (unknown keys) raise.
                    If False (default), they are logged and parsing continues.
        model: Target pydantic model (VerifyConfig by default).
    """

    def __init__(self, file_name: str, strict_mode: bool = False, model: Type[M] = VerifyConfig):
        """Loads, validates and parses the file.

        Raises:
            ConfigError: If the file is missing, is not valid JSON, or does
                not parse into the model (structural errors only with strict_mode).
        """
        self.file_name = file_name
        self.strict_mode = strict_mode
        self.model = model
        self.raw: Any = None
        self.structure_errors: List[str] = []
        self.config: M = self._load()

    def _load(self) -> M:
        self.raw = read_json(self.file_name)
        config, self.structure_errors = parse_config(self.raw, self.model, self.file_name, self.strict_mode)
        logger.info(f"Loaded {self.model.__name__} from {self.file_name}")
        return config

    def __repr__(self):
        return f"ConfigFile(file_name='{self.file_name}', model={self.model.__name__})"


def load_eta(arg: str) -> EtaSpec:
    """Builds an EtaSpec from a catalog kind name, inline JSON or a JSON file path.

    Raises:
        ConfigError: If the argument matches none of the three forms or does not parse.
    """
    text = arg.strip()
    if is_eta_kind_supported(text.lower()):
        return EtaSpec.from_kind(text.lower())
    if text.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ConfigError(f"malformed inline JSON: {e.msg}", key="eta") from e
        return parse_model(data, EtaSpec)
    if os.path.exists(text):
        return ConfigFile(text, model=EtaSpec).config
    raise ConfigError(f"'{arg}' is neither an eta kind, inline JSON nor a file", key="eta")

"""Custom exceptions for sbihari package."""

from typing import Optional


class BihariError(Exception):
    """Base exception for sbihari errors."""

    pass


class DomainError(BihariError, ValueError):
    """Raised when an argument lies outside the domain of a map (e.g. eta at x < 0)."""

    def __init__(self, name: str, value, message: str = ""):
        self.name = name
        self.value = value
        msg = f"{name}={value!r} outside domain"
        if message:
            msg = f"{msg}: {message}"
        super().__init__(msg)


class ArgumentError(BihariError, ValueError):
    """Raised when parameters are invalid (p outside (0,1), misaligned grids, ...)."""

    pass


class NumericError(BihariError, ArithmeticError):
    """Raised when quadrature or root finding fails to converge."""

    def __init__(self, message: str, partial_value: Optional[float] = None):
        self.partial_value = partial_value
        if partial_value is not None:
            message = f"{message} (partial value {partial_value!r})"
        super().__init__(message)


class CoefficientError(NumericError):
    """Raised when an SDE coefficient returns a non-finite value."""

    def __init__(self, time: float, coefficient: str):
        self.time = time
        self.coefficient = coefficient
        super().__init__(f"t={time:.6g}: coefficient '{coefficient}' returned a non-finite value")


class ConfigError(BihariError):
    """Raised when a JSON config is malformed or fails validation."""

    def __init__(self, message: str, path: Optional[str] = None, key: Optional[str] = None):
        self.path = path
        self.key = key
        prefix = ""
        if path:
            prefix = f"{path}: "
        if key:
            prefix = f"{prefix}[{key}] "
        super().__init__(f"{prefix}{message}")


class ProbeWarning(UserWarning):
    """Issued when a concavity/monotonicity probe fails but evaluation continues."""

    pass

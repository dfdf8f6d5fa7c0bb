"""Extended-real helpers and small numeric utilities."""

import math
from typing import Iterable, Union

import numpy as np

# Extended reals are plain floats; the sentinels are the IEEE infinities.
ExtReal = float
NEG_INF: ExtReal = -math.inf
POS_INF: ExtReal = math.inf


def ext_to_display(value_input) -> Union[float, str]:
    """
    Converts an extended real to its display/JSON form.

    Args:
      value_input: A float (possibly +-inf) or something convertible to float.

    Returns:
      The float itself when finite, "infinity" / "-infinity" for the sentinels,
      "NaN" for NaN and "Invalid" if conversion fails.
    """
    try:
        value = float(value_input)
    except (ValueError, TypeError, OverflowError):
        return "Invalid"

    if math.isnan(value):
        return "NaN"
    if value == POS_INF:
        return "infinity"
    if value == NEG_INF:
        return "-infinity"
    return value


def display_to_ext(value_input) -> ExtReal:
    """Inverse of ext_to_display for the sentinel strings."""
    if isinstance(value_input, str):
        text = value_input.strip().lower()
        if text in ("infinity", "inf", "+inf", "+infinity"):
            return POS_INF
        if text in ("-infinity", "-inf"):
            return NEG_INF
    return float(value_input)


def log_grid(lo: float, hi: float, num: int) -> np.ndarray:
    """Returns `num` log-spaced points in [lo, hi] (both endpoints included)."""
    if lo <= 0 or hi <= lo:
        raise ValueError(f"log_grid needs 0 < lo < hi, got lo={lo}, hi={hi}")
    if num < 2:
        raise ValueError(f"log_grid needs at least 2 points, got {num}")
    return np.geomspace(lo, hi, num)


def is_integer_multiple(value: float, step_count: int, tol: float = 1e-9) -> bool:
    """True if value * step_count is an integer (within tol)."""
    product = value * step_count
    return abs(product - round(product)) <= tol * max(1.0, abs(product))


def p_mean(samples: Iterable[float], p: float) -> float:
    """The p-norm (mean of |s|^p)^(1/p) of an equally weighted sample."""
    arr = np.abs(np.asarray(list(samples), dtype=float))
    if arr.size == 0:
        raise ValueError("p_mean of an empty sample")
    return float(np.mean(arr**p) ** (1.0 / p))

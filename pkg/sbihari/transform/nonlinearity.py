"""Evaluation of the nonlinearities eta, the transform eta_p and shape probes.

Every catalog kind is evaluated two ways: a scalar closure built on `math`
(the integrand of the quadratures in `gtransform`) and a vectorized numpy
version for grids. Both agree to rounding.
"""

import logging
import math
from typing import Callable, Dict, Optional, Sequence, Union

import numpy as np

from sbihari.exceptions import ArgumentError, DomainError
from sbihari.objects import EtaSpec
from sbihari.utils import log_grid

logger = logging.getLogger(__name__)

INV_E = math.exp(-1.0)
PROBE_REL_TOL = 1e-12

ScalarOrArray = Union[float, np.ndarray]


def _capped_xlogx(m: float) -> float:
    # m * log(1/m), extended by 0 at m = 0
    return 0.0 if m <= 0.0 else m * math.log(1.0 / m)


def make_eta(spec: EtaSpec) -> Callable[[float], float]:
    """Returns a scalar closure x -> eta(x) for x >= 0 (no domain checks)."""
    kind = spec.kind
    params = spec.params

    if kind == "tabulated":
        knots = np.asarray(params["knots"], dtype=float)
        values = np.asarray(params["values"], dtype=float)
        last_slope = float((values[-1] - values[-2]) / (knots[-1] - knots[-2]))
        last_knot, last_value = float(knots[-1]), float(values[-1])

        def eta_tabulated(x: float) -> float:
            if x >= last_knot:
                return last_value + last_slope * (x - last_knot)
            return float(np.interp(x, knots, values))

        return eta_tabulated

    K = float(params["K"])
    if kind == "linear":
        return lambda x: K * x
    if kind == "power":
        a = float(params["a"])
        return lambda x: K * x**a
    if kind == "xlog":
        return lambda x: K * (x + _capped_xlogx(min(x, INV_E)))
    if kind == "square":
        return lambda x: K * x * x
    if kind == "xarctan":
        return lambda x: 0.0 if x == 0.0 else K * x * math.atan(1.0 / x)
    raise ArgumentError(f"Unsupported eta kind '{kind}'")


def _eta_vector(spec: EtaSpec, x: np.ndarray) -> np.ndarray:
    kind = spec.kind
    params = spec.params
    if kind == "tabulated":
        knots = np.asarray(params["knots"], dtype=float)
        values = np.asarray(params["values"], dtype=float)
        slope = (values[-1] - values[-2]) / (knots[-1] - knots[-2])
        out = np.interp(x, knots, values)
        above = x > knots[-1]
        out[above] = values[-1] + slope * (x[above] - knots[-1])
        return out

    K = float(params["K"])
    if kind == "linear":
        return K * x
    if kind == "power":
        return K * x ** float(params["a"])
    if kind == "xlog":
        m = np.minimum(x, INV_E)
        with np.errstate(divide="ignore", invalid="ignore"):
            cap = np.where(m > 0, m * np.log(1.0 / np.where(m > 0, m, 1.0)), 0.0)
        return K * (x + cap)
    if kind == "square":
        return K * x * x
    if kind == "xarctan":
        with np.errstate(divide="ignore"):
            return np.where(x > 0, K * x * np.arctan(1.0 / np.where(x > 0, x, 1.0)), 0.0)
    raise ArgumentError(f"Unsupported eta kind '{kind}'")


def eval_eta(spec: EtaSpec, x: ScalarOrArray) -> ScalarOrArray:
    """Evaluates eta at x >= 0 (scalar or array).

    Raises:
        DomainError: If any x is negative.
    """
    if np.ndim(x) == 0:
        x = float(x)
        if x < 0 or math.isnan(x):
            raise DomainError("x", x, "eta is defined on [0, inf)")
        return float(make_eta(spec)(x))
    arr = np.asarray(x, dtype=float)
    if np.any(arr < 0) or np.any(np.isnan(arr)):
        raise DomainError("x", float(np.nanmin(arr)), "eta is defined on [0, inf)")
    return _eta_vector(spec, arr)


def check_exponent(p: float, name: str = "p") -> float:
    """Returns p as float if 0 < p < 1, else raises ArgumentError."""
    p = float(p)
    if not 0.0 < p < 1.0:
        raise ArgumentError(f"{name}={p} must lie in (0, 1)")
    return p


def make_eta_p(spec: EtaSpec, p: float) -> Callable[[float], float]:
    """Returns a scalar closure x -> eta_p(x) for x > 0 (no domain checks)."""
    p = check_exponent(p)
    eta = make_eta(spec)
    factor = p / (1.0 - p)

    def eta_p(x: float) -> float:
        try:
            lifted = x ** (1.0 / p)
        except OverflowError:
            return math.inf
        return factor * eta(lifted) * x ** (1.0 - 1.0 / p)

    return eta_p


def eval_eta_p(spec: EtaSpec, p: float, x: ScalarOrArray) -> ScalarOrArray:
    """Evaluates eta_p(x) = (p/(1-p)) eta(x^(1/p)) x^(1-1/p) at x > 0.

    Raises:
        ArgumentError: If p is outside (0, 1).
        DomainError: If any x <= 0.
    """
    p = check_exponent(p)
    if np.ndim(x) == 0:
        x = float(x)
        if not x > 0:
            raise DomainError("x", x, "eta_p is defined on (0, inf)")
        return float(make_eta_p(spec, p)(x))
    arr = np.asarray(x, dtype=float)
    if not np.all(arr > 0):
        raise DomainError("x", float(np.nanmin(arr)), "eta_p is defined on (0, inf)")
    with np.errstate(over="ignore"):
        return (p / (1.0 - p)) * _eta_vector(spec, arr ** (1.0 / p)) * arr ** (1.0 - 1.0 / p)


def probe_monotone_concave(
    spec: EtaSpec,
    grid: Sequence[float],
    mode: str = "eta",
    p: Optional[float] = None,
) -> Dict[str, bool]:
    """Numerically probes monotonicity and midpoint concavity on a grid.

    Args:
        spec: The nonlinearity.
        grid: Strictly increasing positive points (at least 3).
        mode: 'eta' to probe eta itself, 'eta_p' to probe eta_p (needs p).
        p: Exponent for mode 'eta_p'.

    Returns:
        {'monotone': bool, 'concave': bool}. Tolerances are 1e-12 times the
        largest absolute value on the grid.

    Raises:
        ArgumentError: On a short or non-increasing grid, or an unknown mode.
    """
    xs = np.asarray(grid, dtype=float)
    if xs.ndim != 1 or xs.size < 3:
        raise ArgumentError("probe grid needs at least 3 points")
    if np.any(np.diff(xs) <= 0) or xs[0] <= 0:
        raise ArgumentError("probe grid must be positive and strictly increasing")

    if mode == "eta":
        f = lambda v: eval_eta(spec, v)  # noqa: E731
    elif mode == "eta_p":
        if p is None:
            raise ArgumentError("mode 'eta_p' needs the exponent p")
        f = lambda v: eval_eta_p(spec, p, v)  # noqa: E731
    else:
        raise ArgumentError(f"Unknown probe mode '{mode}'")

    values = f(xs)
    mids = f(0.5 * (xs[:-1] + xs[1:]))
    finite = values[np.isfinite(values)]
    scale = float(np.max(np.abs(finite))) if finite.size else 1.0
    tol = PROBE_REL_TOL * max(scale, 1e-300)

    monotone = bool(np.all(np.diff(values) >= -tol))
    concave = bool(np.all(mids >= 0.5 * (values[:-1] + values[1:]) - tol))
    logger.debug(f"Probe {spec.kind} mode={mode} p={p}: monotone={monotone}, concave={concave}")
    return {"monotone": monotone, "concave": concave}


def default_probe_grid() -> np.ndarray:
    """64 log-spaced points in [1e-3, 1e3]."""
    return log_grid(1e-3, 1e3, 64)

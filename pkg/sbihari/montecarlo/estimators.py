"""Monte Carlo estimators with standard errors.

Standard errors are sample standard deviations (ddof=1) over sqrt(n); with
fewer than two samples they are +inf, so every verdict is INCONCLUSIVE.
"""

import math
from typing import Iterable, Tuple

import numpy as np
from scipy import integrate

from sbihari.exceptions import ArgumentError
from sbihari.objects import McEstimate


def _as_samples(samples: Iterable[float], name: str = "samples") -> np.ndarray:
    if not isinstance(samples, np.ndarray):
        samples = list(samples)
    arr = np.asarray(samples, dtype=float).ravel()
    if arr.size == 0:
        raise ArgumentError(f"{name} must not be empty")
    return arr


def standard_error(x: np.ndarray) -> float:
    """s / sqrt(n) with the ddof=1 sample deviation (+inf for n < 2)."""
    n = len(x)
    if n < 2:
        return math.inf
    return float(np.std(x, ddof=1) / np.sqrt(n))


def estimate_mean(samples: Iterable[float]) -> McEstimate:
    """Sample mean with its standard error.

    Samples equal to -inf (e.g. G(0) under the Osgood condition) make the
    mean -inf with zero error; +inf samples make it +inf.

    Raises:
        ArgumentError: On an empty or NaN-containing sample.
    """
    arr = _as_samples(samples)
    if np.any(np.isnan(arr)):
        raise ArgumentError("samples contain NaN")
    if np.any(arr == math.inf):
        return McEstimate(estimate=math.inf, std_error=0.0, n_trials=arr.size)
    if np.any(arr == -math.inf):
        return McEstimate(estimate=-math.inf, std_error=0.0, n_trials=arr.size)
    return McEstimate(estimate=float(np.mean(arr)), std_error=standard_error(arr), n_trials=arr.size)


def estimate_p_norm(samples: Iterable[float], p: float) -> McEstimate:
    """||Z||_p = (mean of Z^p)^(1/p) with a delta-method standard error.

    With m = mean(Z^p) the error is (1/p) m^(1/p - 1) * se(Z^p); a zero
    mean gives estimate 0 and error 0.

    Raises:
        ArgumentError: On an empty sample, negative samples or p outside (0, 1].
    """
    if not 0 < p <= 1:
        raise ArgumentError(f"p={p} must lie in (0, 1]")
    arr = _as_samples(samples)
    if np.any(arr < 0) or np.any(np.isnan(arr)):
        raise ArgumentError("p-norm samples must be non-negative")
    if np.any(np.isinf(arr)):
        return McEstimate(estimate=math.inf, std_error=0.0, n_trials=arr.size)
    powered = arr**p
    m = float(np.mean(powered))
    if m == 0.0:
        return McEstimate(estimate=0.0, std_error=0.0, n_trials=arr.size)
    se = (1.0 / p) * m ** (1.0 / p - 1.0) * standard_error(powered)
    return McEstimate(estimate=m ** (1.0 / p), std_error=se, n_trials=arr.size)


def layer_cake_p_norm(samples: Iterable[float], p: float) -> float:
    """||Z||_p through E[Z^p] = p * int_0^inf P[Z >= u] u^(p-1) du.

    The empirical survival function is constant between consecutive
    distinct sample values, so the integral is a sum of quadratures of
    p u^(p-1) over those pieces (the first piece starts at 0 and uses the
    algebraic weight u^(p-1)).

    Raises:
        ArgumentError: On an empty sample, negative or non-finite samples or p outside (0, 1].
    """
    if not 0 < p <= 1:
        raise ArgumentError(f"p={p} must lie in (0, 1]")
    arr = _as_samples(samples)
    if np.any(arr < 0) or not np.all(np.isfinite(arr)):
        raise ArgumentError("layer-cake samples must be finite and non-negative")
    values, counts = np.unique(arr, return_counts=True)
    survival = np.cumsum(counts[::-1])[::-1] / arr.size

    total = 0.0
    lower = 0.0
    for value, surv in zip(values, survival):
        if value > lower:
            if lower == 0.0:
                piece, _ = integrate.quad(
                    lambda u: p, 0.0, value, weight="alg", wvar=(p - 1.0, 0.0)
                )
            else:
                piece, _ = integrate.quad(lambda u: p * u ** (p - 1.0), lower, value, epsrel=1e-12)
            total += surv * piece
        lower = value
    return total ** (1.0 / p)


def exceedance_probability(samples: Iterable[float], threshold: float) -> McEstimate:
    """P[Z > threshold] with the binomial standard error sqrt(q(1-q)/n)."""
    arr = _as_samples(samples)
    q = float(np.mean(arr > threshold))
    return McEstimate(estimate=q, std_error=math.sqrt(q * (1.0 - q) / arr.size), n_trials=arr.size)


def ratio_of_means(numerator: np.ndarray, denominator: np.ndarray) -> McEstimate:
    """mean(Y) / mean(Z) with the delta-method error sd(Y - R Z) / (sqrt(n) mean(Z)).

    Raises:
        ArgumentError: On empty or mismatched samples or a zero denominator mean.
    """
    y = _as_samples(numerator, "numerator")
    z = _as_samples(denominator, "denominator")
    if y.shape != z.shape:
        raise ArgumentError("numerator and denominator samples must have the same length")
    z_mean = float(np.mean(z))
    if z_mean == 0.0:
        raise ArgumentError("denominator mean is zero")
    ratio = float(np.mean(y)) / z_mean
    se = standard_error(y - ratio * z) / abs(z_mean)
    return McEstimate(estimate=ratio, std_error=se, n_trials=y.size)


def largest_increase(estimates: Iterable[McEstimate]) -> Tuple[float, float]:
    """(max_i (q_{i+1} - q_i), standard error of that difference) over a ladder.

    A single-entry ladder gives (0, 0).
    """
    items = list(estimates)
    best, best_se = 0.0, 0.0
    for lo, hi in zip(items, items[1:]):
        diff = hi.estimate - lo.estimate
        se = math.hypot(lo.std_error, hi.std_error)
        if diff > best or (diff == best and se > best_se):
            best, best_se = diff, se
    return best, best_se

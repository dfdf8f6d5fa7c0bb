"""Convergence experiments of the Euler approximates.

The tables report the Cauchy exceedance P[sup |X^(n) - X^(m)| > eps] on
coupled meshes, the frequency of truncated runs as the truncation radius
grows, and the observed order of the zero-noise linear model.
"""

import logging
import math
from typing import Dict, List, Optional, Sequence

import numpy as np

from sbihari.exceptions import ArgumentError
from sbihari.montecarlo.estimators import exceedance_probability
from sbihari.montecarlo.runner import run_trials
from sbihari.objects import LevyConfig
from sbihari.simulation import (
    RngStream,
    SdeModel,
    coupled_pair,
    euler_simulate,
    gbm_model,
    generate,
)

logger = logging.getLogger(__name__)


def _check_ladder(n_list: Sequence[int]):
    if len(n_list) < 2:
        raise ArgumentError("a ladder needs at least two meshes")
    for n, m in zip(n_list, n_list[1:]):
        if not 0 < n < m or m % n:
            raise ArgumentError(f"ladder {list(n_list)} must be strictly increasing with n | next n")


def cauchy_experiment(
    model: SdeModel,
    config: LevyConfig,
    n_list: Sequence[int],
    eps: float,
    trials: int,
    base_seed: int,
    T: float = 1.0,
    cap_R: Optional[float] = None,
    workers: int = 1,
) -> List[Dict]:
    """Exceedance frequency of the sup-distance between consecutive meshes.

    For each consecutive pair (n, m) of n_list the two approximates share
    the noise of the mesh m.

    Returns:
        Rows {"n", "m", "p_exceed", "std_error"}.

    Raises:
        ArgumentError: If eps <= 0 or n_list is not a dividing, increasing ladder.
    """
    if not eps > 0:
        raise ArgumentError(f"eps={eps} must be positive")
    _check_ladder(n_list)
    rows = []
    for n, m in zip(n_list, n_list[1:]):
        factor = m // n

        def block(stream, size, n=n, factor=factor):
            _, _, distance = coupled_pair(model, config, n, factor, T, stream, size, cap_R)
            return {"distance": distance}

        samples = run_trials(block, trials, base_seed, f"cauchy:{n}:{m}", workers)
        exceed = exceedance_probability(samples["distance"], eps)
        logger.info(f"cauchy n={n} m={m}: P[distance > {eps:g}] = {exceed.estimate:.4g}")
        rows.append(
            {"n": n, "m": m, "p_exceed": exceed.estimate, "std_error": exceed.std_error}
        )
    return rows


def truncation_experiment(
    model: SdeModel,
    config: LevyConfig,
    n: int,
    R_list: Sequence[float],
    trials: int,
    base_seed: int,
    T: float = 1.0,
    workers: int = 1,
) -> List[Dict]:
    """Frequency of runs stopped at |X| > R/3, for each R on the same noise.

    Returns:
        Rows {"R", "p_capped", "std_error"}.
    """
    if not R_list or any(not r > 0 for r in R_list):
        raise ArgumentError(f"R_list={list(R_list)} must hold positive radii")

    def block(stream, size):
        driver = generate(config, n, T, stream, size)
        return {
            f"capped:{i}": euler_simulate(model, driver, R).capped.astype(float)
            for i, R in enumerate(R_list)
        }

    samples = run_trials(block, trials, base_seed, f"truncation:{n}", workers)
    rows = []
    for i, R in enumerate(R_list):
        capped = exceedance_probability(samples[f"capped:{i}"], 0.5)
        rows.append({"R": float(R), "p_capped": capped.estimate, "std_error": capped.std_error})
    return rows


def euler_order_ladder(
    n_list: Sequence[int], a: float = 1.0, z0: float = 1.0, T: float = 1.0
) -> List[Dict]:
    """Errors of the zero-noise model dx = a x dt against z0 e^(aT).

    Returns:
        Rows {"n", "X_T", "error", "observed_order"}; the order of a row is
        log(error_prev / error) / log(n / n_prev) (NaN on the first row).
    """
    if not n_list:
        raise ArgumentError("n_list must not be empty")
    model = gbm_model(a=a, b=0.0, z0=z0)
    exact = z0 * math.exp(a * T)
    rows: List[Dict] = []
    for n in n_list:
        driver = generate(LevyConfig(), n, T, RngStream(0, purpose="order"))
        x_T = float(euler_simulate(model, driver).X_T()[0, 0])
        error = abs(x_T - exact)
        order = math.nan
        if rows and error > 0 and rows[-1]["error"] > 0:
            order = math.log(rows[-1]["error"] / error) / math.log(n / rows[-1]["n"])
        rows.append({"n": n, "X_T": x_T, "error": error, "observed_order": order})
    return rows


def is_non_increasing(values: Sequence[float], std_errors: Sequence[float], k: float = 2.0) -> bool:
    """True if every rung exceeds its predecessor by at most k combined standard errors."""
    values = np.asarray(values, dtype=float)
    se = np.asarray(std_errors, dtype=float)
    bound = k * np.hypot(se[:-1], se[1:])
    return bool(np.all(np.diff(values) <= bound + 1e-15))

"""Equality-dynamics test quadruples (X, A, H, M).

On the grid t_k = k/n:

    X_0     = max(floor, H)
    X_{k+1} = max(floor, X_k + eta(Y_k) dA_k + kappa X_k dB_k)

with Y = X* (running sup) under SUP dynamics and Y = X under NOSUP
dynamics. M = sum kappa X dB is a martingale without jumps. With floor = 0
the clamp only keeps X non-negative; exploded trials stay at +inf.
"""

import logging
import math
from typing import Dict

import numpy as np

from sbihari.objects import CadlagPath, QuadrupleConfig
from sbihari.simulation import RngStream
from sbihari.transform import eval_eta

logger = logging.getLogger(__name__)


def _draw_law(stream: RngStream, atoms, size: int) -> np.ndarray:
    values = [atom.value for atom in atoms]
    probs = np.asarray([atom.prob for atom in atoms], dtype=float)
    return stream.choice(values, probs / probs.sum(), size)


def simulate_quadruple_batch(
    cfg: QuadrupleConfig, stream: RngStream, batch: int, keep_paths: bool = False
) -> Dict[str, np.ndarray]:
    """Simulates `batch` independent quadruples from one stream.

    Draw order: Theta (if A is random), H (if random), then the Brownian
    increments (batch, K).

    Returns:
        Dict of per-trial arrays "sup_X", "X_T", "A_T", "H_T", "theta" and,
        with keep_paths, "paths" (batch, K + 1).
    """
    K, step = cfg.n_steps, cfg.step
    theta = _draw_law(stream, cfg.A.theta_law, batch) if cfg.A.is_random else np.ones(batch)
    H = _draw_law(stream, cfg.H_law, batch) if cfg.H_is_random else np.full(batch, cfg.H)
    dB = stream.normal(math.sqrt(step), (batch, K))
    dA = theta[:, None] * cfg.A.grid_increments(step, K)[None, :]

    x = np.maximum(cfg.floor, H)
    sup = x.copy()
    paths = np.empty((batch, K + 1)) if keep_paths else None
    if keep_paths:
        paths[:, 0] = x
    for k in range(K):
        y = sup if cfg.dynamics == "SUP" else x
        with np.errstate(over="ignore", invalid="ignore"):
            x = x + eval_eta(cfg.eta, y) * dA[:, k] + cfg.kappa * x * dB[:, k]
        x = np.maximum(cfg.floor, np.where(np.isnan(x), np.inf, x))
        sup = np.maximum(sup, x)
        if keep_paths:
            paths[:, k + 1] = x

    out = {
        "sup_X": sup,
        "X_T": x,
        "A_T": theta * cfg.A.value(cfg.T),
        "H_T": H,
        "theta": theta,
    }
    if keep_paths:
        out["paths"] = paths
    return out


def simulate_quadruple(cfg: QuadrupleConfig, stream: RngStream) -> Dict:
    """Simulates one quadruple.

    Returns:
        {"X_path": CadlagPath, "A_T", "H_T", "sup_X", "X_T"}.
    """
    out = simulate_quadruple_batch(cfg, stream, 1, keep_paths=True)
    return {
        "X_path": CadlagPath(step=cfg.step, values=out["paths"][0]),
        "A_T": float(out["A_T"][0]),
        "H_T": float(out["H_T"][0]),
        "sup_X": float(out["sup_X"][0]),
        "X_T": float(out["X_T"][0]),
    }

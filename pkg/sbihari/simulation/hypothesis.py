"""Numeric residuals of the monotonicity, growth and local-bound conditions.

For a probe pair of paths (x, y) read at their last node t:

    c1 = 2<x(t-) - y(t-), f(x) - f(y)> + sum_a rate_a |g(x, xi_a) - g(y, xi_a)|^2
         + |h(x) - h(y)|_F^2 - K_env * eta1(sup_[-r,t] |x - y|^2)
    c2 = 2<x(t-), f(x)> + sum_a rate_a |g(x, xi_a)|^2 + |h(x)|_F^2
         - K_env * eta2(1 + sup_[-r,t] |x|^2)
    c4 = |f(x)| + sum_a rate_a |g(x, xi_a)|^2 + |h(x)|_F^2 - K_tilde

The envelopes are constants. A condition holds on the probes when its
largest residual is <= 0.
"""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from sbihari.exceptions import ArgumentError
from sbihari.objects import CadlagPath, EtaSpec, LevyConfig
from sbihari.simulation.euler import SdeModel
from sbihari.simulation.paths import PathView
from sbihari.transform.nonlinearity import eval_eta

logger = logging.getLogger(__name__)


class _Coefficients:
    """f, h and g(., xi_a) of one path at its last node (single trial)."""

    def __init__(self, model: SdeModel, path: CadlagPath, atom_xi: np.ndarray):
        view = PathView.from_path(path)
        t = path.horizon
        self.x = view.current[0]
        self.f = np.asarray(model.drift(t, view), dtype=float).reshape(model.d)
        self.h = np.asarray(model.diffusion(t, view), dtype=float).reshape(model.d, model.m)
        self.g = np.array(
            [np.asarray(model.jump(t, view, xi), dtype=float).reshape(model.d) for xi in atom_xi]
        ).reshape(len(atom_xi), model.d)


def _full_values(path: CadlagPath) -> np.ndarray:
    return np.concatenate([path.init_segment[:-1], path.values])


def hypothesis_residuals(
    model: SdeModel,
    eta1: EtaSpec,
    eta2: EtaSpec,
    probe_pairs: Sequence[Tuple[CadlagPath, CadlagPath]],
    K_env: float,
    levy: Optional[LevyConfig] = None,
    K_tilde: Optional[float] = None,
) -> Dict[str, float]:
    """Largest residuals of the coefficient conditions over probe pairs.

    Args:
        model: The SDE whose coefficients are probed.
        eta1: Modulus of the monotonicity condition.
        eta2: Modulus of the growth condition.
        probe_pairs: Pairs of paths on a common grid with the model's delay.
        K_env: Constant envelope multiplying eta1 and eta2.
        levy: Jump law of the driver (no jumps if omitted).
        K_tilde: Constant of the local bound; c4 is reported only when given.

    Returns:
        {"c1_max_residual", "c2_max_residual"[, "c4_max_residual"]}.

    Raises:
        ArgumentError: If no probes are given, K_env is not positive or a
            pair lives on different grids.
    """
    if not probe_pairs:
        raise ArgumentError("hypothesis_residuals needs at least one probe pair")
    if not K_env > 0:
        raise ArgumentError(f"K_env={K_env} must be positive")

    if levy is None:
        atom_xi, rates = np.zeros((0, model.d)), np.zeros(0)
    else:
        atom_xi, rates = levy.atom_table()

    c1: List[float] = []
    c2: List[float] = []
    c4: List[float] = []
    for x_path, y_path in probe_pairs:
        if x_path.step != y_path.step or x_path.values.shape != y_path.values.shape:
            raise ArgumentError("probe pair paths must share the same grid")
        cx = _Coefficients(model, x_path, atom_xi)
        cy = _Coefficients(model, y_path, atom_xi)
        sup_diff_sq = float(
            np.max(np.sum((_full_values(x_path) - _full_values(y_path)) ** 2, axis=1))
        )

        jump_diff = float(rates @ np.sum((cx.g - cy.g) ** 2, axis=1)) if rates.size else 0.0
        lhs1 = (
            2.0 * float(np.dot(cx.x - cy.x, cx.f - cy.f))
            + jump_diff
            + float(np.sum((cx.h - cy.h) ** 2))
        )
        c1.append(lhs1 - K_env * float(eval_eta(eta1, sup_diff_sq)))

        for c, path in ((cx, x_path), (cy, y_path)):
            jump_sq = float(rates @ np.sum(c.g**2, axis=1)) if rates.size else 0.0
            h_sq = float(np.sum(c.h**2))
            lhs2 = 2.0 * float(np.dot(c.x, c.f)) + jump_sq + h_sq
            sup_sq = float(np.max(np.sum(_full_values(path) ** 2, axis=1)))
            c2.append(lhs2 - K_env * float(eval_eta(eta2, 1.0 + sup_sq)))
            if K_tilde is not None:
                c4.append(float(np.linalg.norm(c.f)) + jump_sq + h_sq - K_tilde)

    result = {"c1_max_residual": max(c1), "c2_max_residual": max(c2)}
    if K_tilde is not None:
        result["c4_max_residual"] = max(c4)
    logger.debug(f"Hypothesis residuals over {len(probe_pairs)} probe pair(s): {result}")
    return result

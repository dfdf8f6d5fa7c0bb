"""Bound formulas of the deterministic and stochastic Bihari-LaSalle inequalities.

All functions here are deterministic: norms of H and values of A enter as
already computed scalars and every randomness lives in `sbihari.montecarlo`.
Explosion is a value (+inf), never an exception.
"""

import logging
import math
import warnings
from typing import Dict, Iterable, Optional, Sequence, Tuple, Union

import numpy as np

from sbihari.exceptions import ArgumentError, ProbeWarning
from sbihari.objects import BoundResult, CadlagPath, EtaSpec, IncreasingProcess, PExponents
from sbihari.transform import GTransform, check_exponent, eval_eta, probe_monotone_concave
from sbihari.transform.nonlinearity import default_probe_grid
from sbihari.utils import NEG_INF, POS_INF, ExtReal, p_mean

logger = logging.getLogger(__name__)

HCASES = ("PREDICTABLE_H", "NONNEG_JUMPS", "L1_H")
VARIANTS = ("SUP", "NOSUP")


def constants(p: float) -> PExponents:
    """The sharp constants beta = (1-p)^-1, alpha1 = (1-p)^(-1/p), alpha2 = 1/p.

    Raises:
        ArgumentError: If p is outside (0, 1).
    """
    p = check_exponent(p)
    return PExponents(
        p=p,
        beta=1.0 / (1.0 - p),
        alpha1=(1.0 - p) ** (-1.0 / p),
        alpha2=1.0 / p,
    )


def _check_case(hcase: str, variant: str):
    if hcase not in HCASES:
        raise ArgumentError(f"Unknown H-case '{hcase}', expected one of {HCASES}")
    if variant not in VARIANTS:
        raise ArgumentError(f"Unknown variant '{variant}', expected one of {VARIANTS}")


def _check_nonneg(**values: float):
    for name, value in values.items():
        if not value >= 0:
            raise ArgumentError(f"{name}={value} must be non-negative")


def bihari_step(t: GTransform, H: float, a: float) -> ExtReal:
    """G^{-1}(G(H) + a) with sentinel propagation."""
    return t.inverse(t.evaluate(H) + a)


def deterministic_bihari(
    t: GTransform, H: float, A: IncreasingProcess, time: float
) -> BoundResult:
    """x(time) <= G^{-1}(G(H) + A(time)) for x satisfying the deterministic assumption.

    Args:
        t: The transform G.
        H: Constant forcing, H > 0.
        A: Deterministic integrator.
        time: Evaluation time.

    Returns:
        BoundResult whose value is +inf when G(H) + A(time) leaves range(G).

    Raises:
        ArgumentError: If H <= 0, time < 0 or A is random.
    """
    if not H > 0:
        raise ArgumentError(f"H={H} must be positive (shift by a small epsilon for H = 0)")
    _check_nonneg(time=time)
    if A.is_random:
        raise ArgumentError("deterministic_bihari needs a deterministic integrator")

    a_t = A.value(time)
    value = bihari_step(t, H, a_t)
    notes = []
    if value == POS_INF:
        notes.append(f"G(H) + A(t) = {t.evaluate(H) + a_t:.6g} outside range(G)")
    return BoundResult(
        value=value, theorem_tag="deterministic_bihari", constants_used=(1.0, 1.0, 1.0), warnings=notes
    )


def check_hypothesis_path(
    x: CadlagPath,
    A: Union[IncreasingProcess, CadlagPath],
    H: float,
    eta: EtaSpec,
    mode: str = "NOSUP",
    tol: Optional[float] = None,
) -> Dict[str, float]:
    """Tests x(t) <= int_(0,t] eta(y(s-)) dA(s) + H on the grid of x.

    y is x itself (NOSUP) or its running supremum (SUP); the integral is the
    left Riemann-Stieltjes sum. Only the first coordinate of x is read.

    Returns:
        {'holds': bool, 'max_violation': float, 'tolerance': float}. The
        default tolerance is step * max(1, sup x).

    Raises:
        ArgumentError: If A is a path on a different grid, or mode is unknown.
    """
    if mode not in VARIANTS:
        raise ArgumentError(f"Unknown mode '{mode}', expected one of {VARIANTS}")
    xs = x.values[:, 0]
    if isinstance(A, CadlagPath):
        if A.n_steps != x.n_steps or not math.isclose(A.step, x.step, rel_tol=1e-12):
            raise ArgumentError(
                f"integrator grid (step={A.step}, n={A.n_steps}) does not match "
                f"path grid (step={x.step}, n={x.n_steps})"
            )
        a = A.values[:, 0]
    else:
        a = A.values_on(x.times)

    y = np.maximum.accumulate(xs) if mode == "SUP" else xs
    increments = eval_eta(eta, y[:-1]) * np.diff(a)
    rhs = H + np.concatenate(([0.0], np.cumsum(increments)))
    violation = float(max(0.0, np.max(xs - rhs)))
    if tol is None:
        tol = x.step * max(1.0, float(np.max(np.abs(xs))))
    return {"holds": violation <= tol, "max_violation": violation, "tolerance": float(tol)}


def detbihari_p_power_rhs(
    x: CadlagPath, A: IncreasingProcess, H: float, eta: EtaSpec, p: float
) -> Dict[str, np.ndarray]:
    """Both sides of x(t)^p <= (1-p) int_0^t eta_p(x(s-)^p) dA(s) + H^p on the grid.

    Meant for non-decreasing x satisfying the deterministic assumption; with
    equality there, the p-th power relation is an equality up to grid error.

    Returns:
        {'lhs': x^p per node, 'rhs': right side per node}.
    """
    p = check_exponent(p)
    xs = x.values[:, 0]
    a = A.values_on(x.times)
    left = xs[:-1]
    # eta_p(x^p) = (p/(1-p)) eta(x) x^(p-1), extended by 0 at x = 0
    safe = np.where(left > 0, left, 1.0)
    eta_p_at = np.where(left > 0, (p / (1 - p)) * eval_eta(eta, left) * safe ** (p - 1), 0.0)
    integral = np.concatenate(([0.0], np.cumsum(eta_p_at * np.diff(a))))
    return {"lhs": np.abs(xs) ** p, "rhs": (1 - p) * integral + H**p}


def concave_constants(p: float, hcase: str, variant: str) -> Tuple[float, float, float]:
    """(c1 inside G, c2 multiplying A, c3 outer multiplier) of the concave bound."""
    _check_case(hcase, variant)
    k = constants(p)
    if variant == "SUP":
        c1 = k.alpha1 if hcase == "L1_H" else k.alpha1 * k.alpha2
        return c1, k.beta, 1.0
    c1 = 1.0 if hcase == "L1_H" else k.alpha2
    return c1, 1.0, k.alpha1


def probe_for_case(
    eta: EtaSpec, p: float, hcase: str, variant: str, grid: Optional[Sequence[float]] = None
) -> Tuple[str, Dict[str, bool]]:
    """Runs the shape probe the case requires: eta for NOSUP/L1_H, eta_p otherwise."""
    grid = default_probe_grid() if grid is None else grid
    if variant == "NOSUP" and hcase == "L1_H":
        return "eta", probe_monotone_concave(eta, grid, mode="eta")
    return "eta_p", probe_monotone_concave(eta, grid, mode="eta_p", p=p)


def concave_bound(
    t: GTransform,
    p: float,
    hcase: str,
    variant: str,
    H_norm: float,
    A_T: float,
    strict_mode: bool = False,
    probe_grid: Optional[Sequence[float]] = None,
) -> BoundResult:
    """Bound on ||X*_T||_p for concave nonlinearities and deterministic A.

    SUP:   G^{-1}(G(c1 * H_norm) + beta * A_T) with c1 = alpha1 alpha2 (alpha1 for L1_H).
    NOSUP: alpha1 * G^{-1}(G(c1 * H_norm) + A_T) with c1 = alpha2 (1 for L1_H).

    H_norm is ||H_T||_p, or ||H_T||_1 for L1_H. A failed concavity probe is
    logged and recorded in the result (raised with strict_mode).

    Raises:
        ArgumentError: On negative inputs, p outside (0, 1), an unknown case,
            or a failed probe with strict_mode.
    """
    _check_case(hcase, variant)
    _check_nonneg(H_norm=H_norm, A_T=A_T)
    c1, c2, c3 = concave_constants(p, hcase, variant)

    probed, result = probe_for_case(t.eta, p, hcase, variant, probe_grid)
    probe_ok = result["monotone"] and result["concave"]
    notes = []
    if not probe_ok:
        msg = (
            f"{probed} of eta kind '{t.eta.kind}' failed the probe at p={p} "
            f"(monotone={result['monotone']}, concave={result['concave']})"
        )
        if strict_mode:
            raise ArgumentError(msg)
        logger.warning(f"{msg}; evaluating the bound anyway")
        warnings.warn(msg, ProbeWarning, stacklevel=2)
        notes.append(msg)

    inner = bihari_step(t, c1 * H_norm, c2 * A_T)
    value = POS_INF if inner == POS_INF else c3 * inner
    tag = f"concave_bound[{variant},{hcase}; probe {probed}: {'ok' if probe_ok else 'failed'}]"
    return BoundResult(value=value, theorem_tag=tag, constants_used=(c1, c2, c3), warnings=notes)


def remark34_pair(t: GTransform, p: float, h: float, x: float) -> Tuple[ExtReal, ExtReal]:
    """(alpha1 G^{-1}(G(h) + x), G^{-1}(G(alpha1 h) + beta x)); the first never exceeds the second.

    Raises:
        ArgumentError: If h <= 0 or x < 0.
    """
    if not h > 0:
        raise ArgumentError(f"h={h} must be positive")
    _check_nonneg(x=x)
    k = constants(p)
    inner = bihari_step(t, h, x)
    lhs = POS_INF if inner == POS_INF else k.alpha1 * inner
    rhs = bihari_step(t, k.alpha1 * h, k.beta * x)
    return lhs, rhs


def random_A_constants(p: float, hcase: str, variant: str) -> Tuple[float, float]:
    """(kappa, beta') of the random-integrator bounds (beta' = 1 under NOSUP)."""
    _check_case(hcase, variant)
    k = constants(p)
    kappa = k.alpha1 if hcase == "L1_H" else k.alpha1 * k.alpha2
    return kappa, (k.beta if variant == "SUP" else 1.0)


def random_A_check_values(
    t: GTransform,
    p: float,
    q: float,
    hcase: str,
    variant: str,
    H_norm: float,
    A_T_sample: float,
    Xstar_sample: float,
) -> Tuple[float, float]:
    """The per-trial statistic and the right side of the random-integrator bound.

    weighted = G^{-1}(G(kappa H_norm) + beta' A_T)^(-q) * (X*_T)^p
    rhs      = (q / (q - p)) * (kappa H_norm)^(p - q)

    The mean of `weighted` over trials is bounded by `rhs`.

    Raises:
        ArgumentError: If q <= p or H_norm <= 0.
    """
    if not q > p:
        raise ArgumentError(f"q={q} must exceed p={p}")
    if not H_norm > 0:
        raise ArgumentError(f"H_norm={H_norm} must be positive")
    _check_nonneg(A_T_sample=A_T_sample, Xstar_sample=Xstar_sample)
    kappa, beta_prime = random_A_constants(p, hcase, variant)
    rhs = (q / (q - p)) * (kappa * H_norm) ** (p - q)
    if Xstar_sample == 0:
        return 0.0, rhs
    level = bihari_step(t, kappa * H_norm, beta_prime * A_T_sample)
    if level == POS_INF:
        return 0.0, rhs
    return level ** (-q) * Xstar_sample**p, rhs


def gronwall_random_A_bound(
    p: float, q: float, hcase: str, variant: str, H_norm: float, exp_A_norm: float
) -> BoundResult:
    """Linear-eta bound ||X*_T||_q <= kappa * H_norm * ||exp(beta' A_T)||_{qp/(p-q)}.

    exp_A_norm is the caller's value of ||exp(beta' A_T)||_r with
    r = qp/(p - q) and beta' from `random_A_constants`.

    Raises:
        ArgumentError: Unless 0 < q < p < 1 and the norms are non-negative.
    """
    p = check_exponent(p)
    if not 0 < q < p:
        raise ArgumentError(f"need 0 < q < p, got q={q}, p={p}")
    _check_nonneg(H_norm=H_norm, exp_A_norm=exp_A_norm)
    kappa, beta_prime = random_A_constants(p, hcase, variant)
    return BoundResult(
        value=kappa * H_norm * exp_A_norm,
        theorem_tag=f"gronwall_random_A[{variant},{hcase}]",
        constants_used=(kappa, beta_prime, 1.0),
    )


def gronwall_exponent(p: float, q: float) -> float:
    """r = qp/(p - q), the norm exponent of exp(A_T) in the linear random-integrator bound."""
    return q * p / (p - q)


def thm38_expected_G_rhs(t: GTransform, E_A: float, E_H: float) -> ExtReal:
    """E[A] + G(E[H]) (-inf when E[H] = 0 under the Osgood condition).

    Raises:
        ArgumentError: On negative inputs.
    """
    _check_nonneg(E_A=E_A, E_H=E_H)
    g = t.evaluate(E_H)
    if g == NEG_INF:
        return NEG_INF
    return E_A + g


def thm38iv_rhs(p: float, samples: Iterable[float]) -> float:
    """alpha1 alpha2 * ||sample||_p over an equally weighted sample of A_T + G(E[H]).

    Raises:
        ArgumentError: On an empty sample or p outside (0, 1).
    """
    k = constants(p)
    arr = np.asarray(list(samples), dtype=float)
    if arr.size == 0:
        raise ArgumentError("thm38iv_rhs needs at least one sample")
    if not np.all(np.isfinite(arr)):
        raise ArgumentError("thm38iv_rhs needs finite samples")
    return k.alpha1 * k.alpha2 * p_mean(arr, p)

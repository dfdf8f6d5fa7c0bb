"""Empirical checks of the stochastic Bihari-LaSalle bounds on test quadruples.

Each check simulates equality-dynamics quadruples, estimates the bounded
quantity and compares it one-sided against the bound plus a grid-bias
slack of 3/sqrt(n) * max(1, |bound|).
"""

import logging
import math
from typing import Dict, List, Optional, Sequence

import numpy as np

from sbihari.bounds import (
    concave_bound,
    gronwall_exponent,
    gronwall_random_A_bound,
    random_A_check_values,
    random_A_constants,
    thm38_expected_G_rhs,
    thm38iv_rhs,
)
from sbihari.exceptions import ArgumentError
from sbihari.montecarlo.estimators import (
    estimate_mean,
    estimate_p_norm,
    exceedance_probability,
    largest_increase,
)
from sbihari.montecarlo.quadruple import simulate_quadruple_batch
from sbihari.montecarlo.runner import run_trials
from sbihari.objects import McEstimate, McReport, QuadrupleConfig
from sbihari.transform import GTransform

logger = logging.getLogger(__name__)

SLACK_FACTOR = 3.0


def grid_slack(bound: float, n_per_unit: int) -> float:
    """3/sqrt(n) * max(1, |bound|); zero for an infinite bound."""
    if not math.isfinite(bound):
        return 0.0
    return SLACK_FACTOR / math.sqrt(n_per_unit) * max(1.0, abs(bound))


def run_quadruples(
    cfg: QuadrupleConfig, trials: int, base_seed: int, purpose: str, workers: int = 1
) -> Dict[str, np.ndarray]:
    """Per-trial sup_X, X_T, A_T, H_T, theta of `trials` quadruples."""

    def block(stream, size):
        return simulate_quadruple_batch(cfg, stream, size)

    return run_trials(block, trials, base_seed, purpose, workers)


def _log_report(report: McReport):
    logger.info(
        f"{report.quantity_tag}: estimate={report.estimate:.6g} "
        f"(se {report.std_error:.3g}), bound={report.theoretical_bound:.6g} "
        f"+ slack {report.slack:.3g} -> {report.verdict}"
    )
    return report


def _h_norm(cfg: QuadrupleConfig, p: float, hcase: str) -> float:
    return cfg.H_p_norm(1.0) if hcase == "L1_H" else cfg.H_p_norm(p)


def verify_concave_bound(
    cfg: QuadrupleConfig,
    p: float,
    hcase: str,
    variant: str,
    trials: int,
    base_seed: int,
    workers: int = 1,
    ci_level: float = 0.99,
    strict_mode: bool = False,
) -> McReport:
    """||X*_T||_p of quadruples against the concave bound with deterministic A.

    The quadruple evolves with the dynamics of `variant` so that it satisfies
    the assumption the bound is stated under.

    Raises:
        ArgumentError: If the integrator is random (or a probe fails with strict_mode).
    """
    if cfg.A.is_random:
        raise ArgumentError("verify_concave_bound needs a deterministic integrator")
    cfg = cfg.model_copy(update={"dynamics": variant})
    gt = GTransform(cfg.eta, anchor_c=cfg.anchor_c)
    A_T = cfg.A.value(cfg.T)
    bound = concave_bound(gt, p, hcase, variant, _h_norm(cfg, p, hcase), A_T, strict_mode=strict_mode)

    samples = run_quadruples(cfg, trials, base_seed, "thm31", workers)
    estimate = estimate_p_norm(samples["sup_X"], p)
    details = {
        "theorem_tag": bound.theorem_tag,
        "constants_used": list(bound.constants_used),
        "A_T": A_T,
        "tightness": estimate.estimate / bound.value if bound.value > 0 else None,
    }
    notes = list(bound.warnings)
    if gt.sup_is_estimate:
        notes.append("sup of range(G) is a numerical estimate")
    return _log_report(
        McReport.from_estimate(
            f"||X*_T||_{p:g} [{variant},{hcase}]",
            estimate,
            bound.value,
            slack=grid_slack(bound.value, cfg.n_per_unit),
            seed=base_seed,
            ci_level=ci_level,
            warnings=notes,
            details=details,
        )
    )


def verify_random_A(
    cfg: QuadrupleConfig,
    p: float,
    q: float,
    hcase: str,
    variant: str,
    trials: int,
    base_seed: int,
    workers: int = 1,
    ci_level: float = 0.99,
) -> McReport:
    """Mean of G^{-1}(G(kappa ||H||) + beta' A_T)^(-q) (X*_T)^p against q/(q-p) (kappa ||H||)^(p-q).

    Raises:
        ArgumentError: If q <= p or H is random.
    """
    if not q > p:
        raise ArgumentError(f"q={q} must exceed p={p}")
    if cfg.H_is_random:
        raise ArgumentError("verify_random_A needs a constant H")
    cfg = cfg.model_copy(update={"dynamics": variant})
    gt = GTransform(cfg.eta, anchor_c=cfg.anchor_c)
    H_norm = _h_norm(cfg, p, hcase)

    samples = run_quadruples(cfg, trials, base_seed, "cor36", workers)
    # The level G^{-1}(...)^(-q) only depends on A_T, which takes few values
    levels, inverse = np.unique(samples["A_T"], return_inverse=True)
    factors = np.empty(levels.size)
    rhs = 0.0
    for i, a_t in enumerate(levels):
        factors[i], rhs = random_A_check_values(gt, p, q, hcase, variant, H_norm, float(a_t), 1.0)
    weighted = factors[inverse] * samples["sup_X"] ** p

    estimate = estimate_mean(weighted)
    kappa, beta_prime = random_A_constants(p, hcase, variant)
    details = {"kappa": kappa, "beta_prime": beta_prime, "q": q, "distinct_A_T": int(levels.size)}
    return _log_report(
        McReport.from_estimate(
            f"E[level^-{q:g} X*^{p:g}] [{variant},{hcase}]",
            estimate,
            rhs,
            slack=grid_slack(rhs, cfg.n_per_unit),
            seed=base_seed,
            ci_level=ci_level,
            details=details,
        )
    )


def verify_gronwall_random_A(
    cfg: QuadrupleConfig,
    p: float,
    q: float,
    hcase: str,
    variant: str,
    trials: int,
    base_seed: int,
    workers: int = 1,
    ci_level: float = 0.99,
) -> McReport:
    """||X*_T||_q against kappa ||H|| ||exp(beta' K A_T)||_r for linear eta = K x, 0 < q < p < 1.

    Raises:
        ArgumentError: If eta is not linear or the exponents are out of order.
    """
    if cfg.eta.kind != "linear":
        raise ArgumentError(f"verify_gronwall_random_A needs a linear eta, got '{cfg.eta.kind}'")
    if not 0 < q < p:
        raise ArgumentError(f"need 0 < q < p, got q={q}, p={p}")
    cfg = cfg.model_copy(update={"dynamics": variant})
    K = float(cfg.eta.params["K"])
    _, beta_prime = random_A_constants(p, hcase, variant)
    r = gronwall_exponent(p, q)
    a_T = cfg.A.value(cfg.T)
    if cfg.A.is_random:
        moment = sum(
            atom.prob * math.exp(r * beta_prime * K * atom.value * a_T) for atom in cfg.A.theta_law
        )
    else:
        moment = math.exp(r * beta_prime * K * a_T)
    exp_A_norm = moment ** (1.0 / r)
    bound = gronwall_random_A_bound(p, q, hcase, variant, _h_norm(cfg, p, hcase), exp_A_norm)

    samples = run_quadruples(cfg, trials, base_seed, "gronwall_random_a", workers)
    estimate = estimate_p_norm(samples["sup_X"], q)
    return _log_report(
        McReport.from_estimate(
            f"||X*_T||_{q:g} [{variant},{hcase}]",
            estimate,
            bound.value,
            slack=grid_slack(bound.value, cfg.n_per_unit),
            seed=base_seed,
            ci_level=ci_level,
            details={"theorem_tag": bound.theorem_tag, "r": r, "exp_A_norm": exp_A_norm},
        )
    )


def verify_thm38(
    cfg: QuadrupleConfig,
    p: float,
    trials: int,
    base_seed: int,
    workers: int = 1,
    ci_level: float = 0.99,
) -> List[McReport]:
    """The expected-G bound and the G-norm bound for general eta.

    Returns:
        [report for E[G(X_T)] <= E[A_T] + G(E[H]),
         report for ||G(X*_T)||_p <= alpha1 alpha2 ||A_T + G(E[H])||_p].
        The second runs with X clamped at c from below.
    """
    gt = GTransform(cfg.eta, anchor_c=cfg.anchor_c)
    c = cfg.anchor_c
    E_H = cfg.H_mean()

    samples = run_quadruples(cfg, trials, base_seed, "thm38:expected", workers)
    g_values = gt.evaluate_many(samples["X_T"])
    estimate = estimate_mean(g_values)
    E_A = cfg.A.theta_mean() * cfg.A.value(cfg.T)
    bound_i = thm38_expected_G_rhs(gt, E_A, E_H)
    report_i = McReport.from_estimate(
        "E[G(X_T)]",
        estimate,
        bound_i,
        slack=grid_slack(bound_i, cfg.n_per_unit),
        seed=base_seed,
        ci_level=ci_level,
        details={"E_A": E_A, "E_H": E_H},
    )

    notes = []
    low_h = [atom.value for atom in cfg.H_law if atom.value < c] if cfg.H_is_random else []
    if low_h or (not cfg.H_is_random and cfg.H < c):
        notes.append(f"H below c={c:g}; X is clamped at c from the start")
    shifted = cfg.model_copy(update={"floor": max(cfg.floor, c)})
    samples = run_quadruples(shifted, trials, base_seed, "thm38:norm", workers)
    g_sup = gt.evaluate_many(samples["sup_X"])
    g_sup = np.maximum(g_sup, 0.0)
    estimate = estimate_p_norm(g_sup, p)
    G_EH = gt.evaluate(E_H)
    if not math.isfinite(G_EH):
        raise ArgumentError(f"G(E[H]) = {G_EH} is not finite; the G-norm bound needs E[H] > 0")
    bound_iv = thm38iv_rhs(p, samples["A_T"] + G_EH)
    report_iv = McReport.from_estimate(
        f"||G(X*_T)||_{p:g}",
        estimate,
        bound_iv,
        slack=grid_slack(bound_iv, cfg.n_per_unit),
        seed=base_seed,
        ci_level=ci_level,
        warnings=notes,
        details={"floor": shifted.floor, "G_of_E_H": G_EH},
    )
    return [_log_report(report_i), _log_report(report_iv)]


def osgood_ladder(
    cfg: QuadrupleConfig,
    n_list: Sequence[int],
    delta: float,
    trials: int,
    base_seed: int,
    workers: int = 1,
) -> List[Dict]:
    """P[sup X > delta] for the vanishing initial data H = 1/n, n in n_list.

    Returns:
        Rows {"n", "H", "p_exceed", "std_error"}.
    """
    rows = []
    for n in n_list:
        rung = cfg.model_copy(update={"H": 1.0 / n, "H_law": []})
        samples = run_quadruples(rung, trials, base_seed, f"osgood:{n}", workers)
        exceed = exceedance_probability(samples["sup_X"], delta)
        rows.append(
            {"n": int(n), "H": 1.0 / n, "p_exceed": exceed.estimate, "std_error": exceed.std_error}
        )
    return rows


def ladder_report(
    quantity_tag: str,
    rows: List[Dict],
    column: str,
    trials: int,
    seed: int,
    ci_level: float = 0.99,
    details: Optional[Dict] = None,
) -> McReport:
    """Report that a ladder column is non-increasing: the largest rung-to-rung increase against 0."""
    rungs = [
        McEstimate(estimate=row[column], std_error=row["std_error"], n_trials=trials) for row in rows
    ]
    increase, se = largest_increase(rungs)
    return _log_report(
        McReport.from_estimate(
            quantity_tag,
            McEstimate(estimate=increase, std_error=se, n_trials=trials),
            0.0,
            seed=seed,
            ci_level=ci_level,
            details={"rows": rows, **(details or {})},
        )
    )


def verify_osgood(
    cfg: QuadrupleConfig,
    n_list: Sequence[int],
    delta: float,
    trials: int,
    base_seed: int,
    workers: int = 1,
    ci_level: float = 0.99,
) -> List[McReport]:
    """Zero data gives the zero path; vanishing data gives vanishing exceedance.

    Returns:
        [report of max sup X over trials with H = 0 (bound 0, exact),
         ladder report of P[sup X^(n) > delta] over H = 1/n].
    """
    notes = []
    if not cfg.eta.osgood_at_zero:
        notes.append(f"eta kind '{cfg.eta.kind}' does not satisfy the Osgood condition")
    zero = cfg.model_copy(update={"H": 0.0, "H_law": []})
    samples = run_quadruples(zero, trials, base_seed, "osgood:zero", workers)
    largest = float(np.max(samples["sup_X"]))
    report_zero = McReport.from_estimate(
        "max sup X with H = 0",
        McEstimate(estimate=largest, std_error=0.0, n_trials=trials),
        0.0,
        seed=base_seed,
        ci_level=ci_level,
        warnings=notes,
        details={"nonzero_trials": int(np.count_nonzero(samples["sup_X"]))},
    )
    rows = osgood_ladder(cfg, n_list, delta, trials, base_seed, workers)
    report_ladder = ladder_report(
        f"increase of P[sup X > {delta:g}] over H = 1/n",
        rows,
        "p_exceed",
        trials,
        base_seed,
        ci_level,
        {"delta": delta},
    )
    return [_log_report(report_zero), report_ladder]

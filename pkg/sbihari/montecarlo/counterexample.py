"""The random-integrator counterexample.

On Omega = [0, 1] with omega uniform, split at e / (e + gamma):

  good set: X_t = e^t on [0, 1), then e^(t-1) (e + gamma); A_t = t
  bad set:  X_t = e^t on [0, 1), then 0;                   A_t = min(t, 1)

so X*_T is e^(T-1)(e + gamma) on the good set and e (the left limit at 1)
on the bad set. The ratio ||X*_T||_p^p / ||exp(A_T)||_p^p grows without
bound in gamma for T large, so no bound of the form C ||exp(A_T)||_p can
hold for random integrators.
"""

import logging
import math
from typing import Dict

import numpy as np

from sbihari.exceptions import ArgumentError
from sbihari.montecarlo.estimators import ratio_of_means
from sbihari.montecarlo.runner import run_trials
from sbihari.objects import McReport
from sbihari.simulation import RngStream
from sbihari.transform import check_exponent

logger = logging.getLogger(__name__)

MATCH_STD_ERRORS = 4.0


def _check_args(p: float, gamma: float, T: float):
    check_exponent(p)
    if not gamma > 0:
        raise ArgumentError(f"gamma={gamma} must be positive")
    if not T >= 1:
        raise ArgumentError(f"T={T} must be at least 1")


def counterexample_ratio(p: float, gamma: float, T: float) -> Dict[str, float]:
    """Closed-form two-atom evaluation of the ratio of p-th powers.

    Returns:
        {"ratio_p_pow_p": ||X*_T||_p^p / ||exp(A_T)||_p^p,
         "lower_bound_at_Tn": e^(-p) (e + gamma)^p - 1}.

    Raises:
        ArgumentError: If p is outside (0, 1), gamma <= 0 or T < 1.
    """
    _check_args(p, gamma, T)
    e = math.e
    p_good = e / (e + gamma)
    p_bad = gamma / (e + gamma)
    numerator = math.exp(p * (T - 1)) * (e + gamma) ** p * p_good + math.exp(p) * p_bad
    denominator = math.exp(p * T) * p_good + math.exp(p) * p_bad
    return {
        "ratio_p_pow_p": numerator / denominator,
        "lower_bound_at_Tn": math.exp(-p) * (e + gamma) ** p - 1.0,
    }


def counterexample_samples(
    gamma: float, T: float, stream: RngStream, size: int
) -> Dict[str, np.ndarray]:
    """Per-trial X*_T and exp(A_T) of the construction."""
    e = math.e
    good = stream.uniform(size) <= e / (e + gamma)
    x_star = np.where(good, math.exp(T - 1.0) * (e + gamma), e)
    exp_a = np.where(good, math.exp(T), e)
    return {"x_star": x_star, "exp_A": exp_a}


def counterexample_mc(
    p: float,
    gamma: float,
    T: float,
    trials: int,
    base_seed: int,
    workers: int = 1,
    ci_level: float = 0.99,
) -> McReport:
    """Monte Carlo estimate of the ratio against its closed form.

    PASS iff the estimate lies within 4 standard errors of the closed form,
    FAIL otherwise; INCONCLUSIVE with fewer than two trials.
    """
    _check_args(p, gamma, T)

    def block(stream, size):
        return counterexample_samples(gamma, T, stream, size)

    samples = run_trials(block, trials, base_seed, "counterexample", workers)
    estimate = ratio_of_means(samples["x_star"] ** p, samples["exp_A"] ** p)
    closed = counterexample_ratio(p, gamma, T)

    if not math.isfinite(estimate.std_error):
        verdict = "INCONCLUSIVE"
    elif abs(estimate.estimate - closed["ratio_p_pow_p"]) <= MATCH_STD_ERRORS * estimate.std_error:
        verdict = "PASS"
    else:
        verdict = "FAIL"
    logger.info(
        f"counterexample p={p:g} gamma={gamma:g} T={T:g}: mc={estimate.estimate:.6g} "
        f"closed={closed['ratio_p_pow_p']:.6g} -> {verdict}"
    )
    return McReport(
        quantity_tag=f"||X*_T||_{p:g}^{p:g} / ||exp(A_T)||_{p:g}^{p:g}",
        estimate=estimate.estimate,
        std_error=estimate.std_error,
        n_trials=estimate.n_trials,
        ci_level=ci_level,
        theoretical_bound=closed["ratio_p_pow_p"],
        verdict=verdict,
        seed=base_seed,
        details={"gamma": gamma, "T": T, **closed},
    )

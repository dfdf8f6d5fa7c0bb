"""Monte Carlo estimators, test quadruples and the empirical checks."""

from .convergence import (
    cauchy_experiment,
    euler_order_ladder,
    is_non_increasing,
    truncation_experiment,
)
from .counterexample import counterexample_mc, counterexample_ratio, counterexample_samples
from .estimators import (
    estimate_mean,
    estimate_p_norm,
    exceedance_probability,
    largest_increase,
    layer_cake_p_norm,
    ratio_of_means,
    standard_error,
)
from .quadruple import simulate_quadruple, simulate_quadruple_batch
from .runner import run_trials, simulate_trials
from .verify import (
    grid_slack,
    ladder_report,
    osgood_ladder,
    run_quadruples,
    verify_concave_bound,
    verify_gronwall_random_A,
    verify_osgood,
    verify_random_A,
    verify_thm38,
)

__all__ = [
    "cauchy_experiment",
    "counterexample_mc",
    "counterexample_ratio",
    "counterexample_samples",
    "estimate_mean",
    "estimate_p_norm",
    "euler_order_ladder",
    "exceedance_probability",
    "grid_slack",
    "is_non_increasing",
    "ladder_report",
    "largest_increase",
    "layer_cake_p_norm",
    "osgood_ladder",
    "ratio_of_means",
    "run_quadruples",
    "run_trials",
    "simulate_quadruple",
    "simulate_quadruple_batch",
    "simulate_trials",
    "standard_error",
    "truncation_experiment",
    "verify_concave_bound",
    "verify_gronwall_random_A",
    "verify_osgood",
    "verify_random_A",
    "verify_thm38",
]

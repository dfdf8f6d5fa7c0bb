from sbihari.bounds.bounds import (
    bihari_step,
    check_hypothesis_path,
    concave_bound,
    concave_constants,
    constants,
    detbihari_p_power_rhs,
    deterministic_bihari,
    gronwall_exponent,
    gronwall_random_A_bound,
    probe_for_case,
    random_A_check_values,
    random_A_constants,
    remark34_pair,
    thm38_expected_G_rhs,
    thm38iv_rhs,
)

__all__ = [
    "bihari_step",
    "check_hypothesis_path",
    "concave_bound",
    "concave_constants",
    "constants",
    "detbihari_p_power_rhs",
    "deterministic_bihari",
    "gronwall_exponent",
    "gronwall_random_A_bound",
    "probe_for_case",
    "random_A_check_values",
    "random_A_constants",
    "remark34_pair",
    "thm38_expected_G_rhs",
    "thm38iv_rhs",
]

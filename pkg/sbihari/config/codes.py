"""Code tables for sbihari configs and command-line flags.

This module defines the vocabularies the JSON configs and the CLI accept:
the catalog of nonlinearities, the H-cases and variants of the concave
bounds, the verification checks and the SDE model presets.

Eta kinds:
----------
linear:    K*x
power:     K*x**a, a in (0, 1]
xlog:      K*(x + (x ^ 1/e) * log(1/(x ^ 1/e)))
square:    K*x**2
xarctan:   K*x*arctan(1/x)
tabulated: monotone piecewise-linear interpolation through (knots, values)

Flags:
------
Every kind fixes (osgood_at_zero, diverges_at_infinity) and a config may not
contradict them. For
`power` the flags depend on the exponent a and are resolved by
`eta_flags`. A `tabulated` eta is positive from its first knot on and
extends linearly past its last, so it is never Osgood at zero and always
diverges at infinity.
"""

import math
from typing import Dict, List, Tuple

# Default parameters per catalog kind
ETA_DEFAULT_PARAMS: Dict[str, Dict[str, float]] = {
    "linear": {"K": 1.0},
    "power": {"K": 1.0, "a": 0.5},
    "xlog": {"K": 1.0},
    "square": {"K": 1.0},
    "xarctan": {"K": 1.0},
    "tabulated": {},
}

# (osgood_at_zero, diverges_at_infinity); None means "depends on params"
ETA_FLAGS: Dict[str, Tuple[bool, bool]] = {
    "linear": (True, True),
    "xlog": (True, True),
    "square": (True, False),  # int_0 du/u^2 = inf, int_1^inf du/u^2 < inf
    "xarctan": (True, True),
    "tabulated": (False, True),  # values > 0, linear above the last knot
}

# H-case codes used on the command line
HCASE_CODES = {
    "pred": "PREDICTABLE_H",
    "jumps": "NONNEG_JUMPS",
    "l1": "L1_H",
}

# Variant codes
VARIANT_CODES = {
    "sup": "SUP",
    "nosup": "NOSUP",
}

# Verify checks
CHECK_CODES = {
    "thm31": "Concave bound, deterministic integrator",
    "cor36": "Concave bound, random integrator",
    "thm38": "Expected-G and G-norm bounds for general eta",
    "counterexample": "Random-integrator counterexample",
    "cauchy": "Cauchy property of the Euler approximates",
    "osgood": "Zero data and vanishing data under the Osgood condition",
    "truncation": "Truncation radius statistics of the Euler approximates",
    "gronwall_random_a": "Linear-eta bound with random integrator",
    "euler_order": "Error ladder of the zero-noise linear Euler scheme",
}

# SDE model presets
MODEL_PRESETS = {
    "example43": "Path-dependent drift/diffusion with compensated standard Poisson jumps",
    "gbm": "Geometric Brownian motion dX = a X dt + b X dB",
    "poisson": "Compensated Poisson martingale dX = xi dN~",
    "zero": "Zero coefficients (X stays at its initial value)",
}


def eta_flags(kind: str, params: Dict) -> Tuple[bool, bool]:
    """Get the (osgood_at_zero, diverges_at_infinity) flags of a catalog kind.

    Args:
        kind: Catalog kind name.
        params: The kind's parameters (only `a` of `power` is consulted).

    Returns:
        Tuple of flags.

    Raises:
        KeyError: If kind is not a catalog kind.
    """
    if kind == "power":
        a = float(params.get("a", ETA_DEFAULT_PARAMS["power"]["a"]))
        # int_0 du/u^a diverges only for a >= 1; int_1^inf du/u^a diverges for a <= 1
        return (math.isclose(a, 1.0), a <= 1.0)
    return ETA_FLAGS[kind]


def get_hcase(code: str) -> str:
    """Get the H-case name for a command-line code (e.g. "pred").

    Raises:
        KeyError: If code is not supported.
    """
    return HCASE_CODES[code.strip().lower()]


def get_variant(code: str) -> str:
    """Get the variant name for a command-line code (e.g. "nosup").

    Raises:
        KeyError: If code is not supported.
    """
    return VARIANT_CODES[code.strip().lower()]


def get_supported_eta_kinds() -> List[str]:
    """Get list of all catalog kinds."""
    return list(ETA_DEFAULT_PARAMS.keys())


def is_eta_kind_supported(kind: str) -> bool:
    """Check if an eta kind is in the catalog."""
    return kind in ETA_DEFAULT_PARAMS


def is_check_supported(check: str) -> bool:
    """Check if a verify check name is supported."""
    return check in CHECK_CODES

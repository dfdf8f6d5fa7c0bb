"""Nonlinearities and the transform G.

This package evaluates the catalog nonlinearities eta and eta_p, probes
their shape, and realizes G(x) = int_c^x du/eta(u) with its inverse.
"""

from sbihari.transform.gtransform import GTransform
from sbihari.transform.nonlinearity import (
    check_exponent,
    default_probe_grid,
    eval_eta,
    eval_eta_p,
    make_eta,
    make_eta_p,
    probe_monotone_concave,
)

__all__ = [
    "GTransform",
    "check_exponent",
    "default_probe_grid",
    "eval_eta",
    "eval_eta_p",
    "make_eta",
    "make_eta_p",
    "probe_monotone_concave",
]

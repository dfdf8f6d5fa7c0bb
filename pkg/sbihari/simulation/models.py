"""SDE model presets.

Each builder returns an SdeModel whose coefficients act on a batched
PathView; `build_model` resolves a preset name and its parameters into the
model and the LevyConfig of its driving noise.
"""

import math
from typing import Dict, Optional, Tuple

import numpy as np
from scipy import special

from sbihari.config.codes import MODEL_PRESETS
from sbihari.exceptions import ArgumentError
from sbihari.objects import JumpAtom, JumpComponent, LevyConfig
from sbihari.simulation.euler import SdeModel, constant_history
from sbihari.simulation.paths import PathView

INV_E = math.exp(-1.0)


def capped_xlogx(x: np.ndarray) -> np.ndarray:
    """m log(1/m) with m = min(|x|, 1/e), extended by 0 at x = 0."""
    m = np.minimum(np.abs(x), INV_E)
    return -special.xlogy(m, m)


def example43_model(z0: float = 1.0) -> SdeModel:
    """Path-dependent drift and diffusion with a one-unit delay window.

    f = -2 sgn(x(t-)) |x(t-)|^(1/2) + sup_{t-1 <= s < t} |x(s)|
    h = |x(t-)|^(3/4) + sup_{t-1 <= s < t} |x(s)| + capped x log(1/x) of |x(t-)|
    g = xi (compensated standard Poisson jumps)
    """

    def drift(t: float, view: PathView) -> np.ndarray:
        x = view.current
        window = view.history_sup(1.0)[:, None]
        return -2.0 * np.sign(x) * np.sqrt(np.abs(x)) + window

    def diffusion(t: float, view: PathView) -> np.ndarray:
        x = view.current
        window = view.history_sup(1.0)[:, None]
        return (np.abs(x) ** 0.75 + window + capped_xlogx(x))[:, :, None]

    def jump(t: float, view: PathView, xi: np.ndarray) -> np.ndarray:
        return np.broadcast_to(xi, view.current.shape)

    return SdeModel(
        name="example43",
        d=1,
        m=1,
        delay_r=1.0,
        drift=drift,
        diffusion=diffusion,
        jump=jump,
        history=constant_history(z0),
    )


def unit_poisson_levy(rate: float = 1.0) -> LevyConfig:
    """A scalar driver whose only jumps are unit jumps at `rate` (no Brownian part)."""
    return LevyConfig(
        d=1,
        m=1,
        b=[0.0],
        sigma=[[0.0]],
        jumps=[JumpComponent(rate=rate, atoms=[JumpAtom(xi=[1.0], prob=1.0)])],
        cap=1.0,
    )


def example43_levy() -> LevyConfig:
    """Brownian motion plus a compensated standard Poisson process."""
    return LevyConfig(
        d=1,
        m=1,
        jumps=[JumpComponent(rate=1.0, atoms=[JumpAtom(xi=[1.0], prob=1.0)])],
        cap=1.0,
    )


def gbm_model(a: float = 0.05, b: float = 0.2, z0: float = 1.0) -> SdeModel:
    """dX = a X dt + b X dB, no jumps."""
    return SdeModel(
        name="gbm",
        drift=lambda t, view: a * view.current,
        diffusion=lambda t, view: (b * view.current)[:, :, None],
        jump=lambda t, view, xi: np.zeros_like(view.current),
        history=constant_history(z0),
    )


def poisson_model(z0: float = 1.0) -> SdeModel:
    """dX = int xi dN~: X is z0 plus the compensated jump process."""
    return SdeModel(
        name="poisson",
        drift=lambda t, view: np.zeros_like(view.current),
        diffusion=lambda t, view: np.zeros(view.current.shape + (1,)),
        jump=lambda t, view, xi: np.broadcast_to(xi, view.current.shape),
        history=constant_history(z0),
    )


def zero_model(d: int = 1, m: int = 1, z0: float = 0.0) -> SdeModel:
    """All coefficients zero: X stays at z(0)."""
    return SdeModel(
        name="zero",
        d=d,
        m=m,
        drift=lambda t, view: np.zeros_like(view.current),
        diffusion=lambda t, view: np.zeros(view.current.shape + (m,)),
        jump=lambda t, view, xi: np.zeros_like(view.current),
        history=constant_history(np.full(d, z0)),
    )


def build_model(name: str, params: Optional[Dict] = None) -> Tuple[SdeModel, LevyConfig]:
    """Resolves a preset name into (model, driver config).

    Args:
        name: One of MODEL_PRESETS.
        params: Preset parameters (z0 for all presets; a, b for gbm; rate for
            poisson; d, m for zero).

    Raises:
        ArgumentError: If the preset or one of its parameters is unknown.
    """
    params = dict(params or {})
    if name not in MODEL_PRESETS:
        raise ArgumentError(
            f"Unknown model '{name}'. Supported models: {', '.join(sorted(MODEL_PRESETS))}"
        )
    try:
        if name == "example43":
            return example43_model(**params), example43_levy()
        if name == "gbm":
            return gbm_model(**params), LevyConfig()
        if name == "poisson":
            rate = params.pop("rate", 1.0)
            return poisson_model(**params), unit_poisson_levy(rate)
        d = int(params.get("d", 1))
        m = int(params.get("m", 1))
        levy = LevyConfig(d=d, m=m, b=[0.0] * d, sigma=[[1.0] * m for _ in range(d)])
        return zero_model(**params), levy
    except TypeError as e:
        raise ArgumentError(f"Invalid parameters for model '{name}': {e}") from e

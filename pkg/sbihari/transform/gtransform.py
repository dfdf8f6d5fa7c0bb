"""The transform G(x) = int_c^x du / eta(u), its inverse and the G~_p relations."""

import logging
import math
from typing import Callable, Sequence

import numpy as np
from scipy import integrate, optimize

from sbihari.exceptions import ArgumentError, DomainError, NumericError
from sbihari.objects import EtaSpec
from sbihari.transform.nonlinearity import check_exponent, make_eta, make_eta_p
from sbihari.utils import NEG_INF, POS_INF, ExtReal

logger = logging.getLogger(__name__)

# Knots anchor_c * 2**k, k = -KNOT_SPAN .. KNOT_SPAN
KNOT_SPAN = 64
EVAL_FLOOR = 1e-300
SUP_PROBE_X = 1e12
BRACKET_FACTOR = 256.0
BRACKET_LIMIT = 1e300
BRENTQ_RTOL = 1e-14


class GTransform:
    """
    Numerical G for a nonlinearity eta and anchor c, with a knot cache.

    G is tabulated once at the geometric knots c * 2**k; G(x) is then the
    value at the nearest knot plus one adaptive quadrature to x. Values are
    extended reals: G(0) is -inf under the Osgood condition, and the inverse
    returns +inf (explosion) beyond sup(range G).

    Args:
        eta: The nonlinearity.
        anchor_c: Anchor c > 0, G(c) = 0.
        quad_rel_tol: Relative tolerance of each quadrature.
        inv_abs_tol: Inversion tolerance, relative to the bracket scale.
    """

    def __init__(
        self,
        eta: EtaSpec,
        anchor_c: float = 1.0,
        quad_rel_tol: float = 1e-10,
        inv_abs_tol: float = 1e-12,
    ):
        if not anchor_c > 0 or not math.isfinite(anchor_c):
            raise ArgumentError(f"anchor_c={anchor_c} must be a positive real")
        if not 0 < quad_rel_tol < 1 or not 0 < inv_abs_tol < 1:
            raise ArgumentError("tolerances must lie in (0, 1)")

        self.eta = eta
        self.anchor_c = float(anchor_c)
        self.quad_rel_tol = float(quad_rel_tol)
        self.inv_abs_tol = float(inv_abs_tol)
        self.sup_is_estimate = False

        self._eta = make_eta(eta)
        self._build()

    def __repr__(self):
        return (
            f"GTransform(eta={self.eta.kind}, anchor_c={self.anchor_c}, "
            f"sup={self.cached_sup}, G0={self.G0})"
        )

    # --- Build step ---

    def _inv_eta(self, u: float) -> float:
        value = self._eta(u)
        return math.inf if value <= 0.0 else 1.0 / value

    def _quad(self, func: Callable[[float], float], a: float, b: float) -> float:
        """Adaptive quadrature of func over [a, b] (signed), raising on failure."""
        if a == b:
            return 0.0
        result = integrate.quad(
            func, a, b, epsabs=0.0, epsrel=self.quad_rel_tol, limit=200, full_output=1
        )
        value, abserr = float(result[0]), float(result[1])
        if len(result) == 4 and abserr > 10 * self.quad_rel_tol * abs(value) + 1e-15:
            raise NumericError(
                f"quadrature on [{a:.6g}, {b:.6g}] did not converge: {result[3]}",
                partial_value=value,
            )
        return value

    def _quad_geometric(self, a: float, b: float) -> float:
        """int_a^b du/eta(u) for 0 < a, b, split into pieces of ratio <= BRACKET_FACTOR."""
        lo, hi, sign = (a, b, 1.0) if b >= a else (b, a, -1.0)
        n_pieces = max(1, int(math.ceil(math.log(hi / lo) / math.log(BRACKET_FACTOR))))
        if n_pieces == 1:
            return sign * self._quad(self._inv_eta, lo, hi)
        cuts = np.geomspace(lo, hi, n_pieces + 1)
        return sign * sum(self._quad(self._inv_eta, u, v) for u, v in zip(cuts[:-1], cuts[1:]))

    def _build(self):
        """Precomputes G at the knots, G(0) and sup(range G)."""
        exponents = np.arange(-KNOT_SPAN, KNOT_SPAN + 1)
        self._knots = self.anchor_c * np.power(2.0, exponents)
        values = np.zeros(self._knots.size)
        mid = KNOT_SPAN
        for j in range(mid + 1, self._knots.size):
            values[j] = values[j - 1] + self._quad(self._inv_eta, self._knots[j - 1], self._knots[j])
        for j in range(mid - 1, -1, -1):
            values[j] = values[j + 1] - self._quad(self._inv_eta, self._knots[j], self._knots[j + 1])
        self._knot_values = values

        if self.eta.osgood_at_zero:
            self.G0: ExtReal = NEG_INF
        else:
            self.G0 = float(values[0] - self._quad(self._inv_eta, 0.0, self._knots[0]))

        self.cached_sup: ExtReal = self._compute_sup()
        logger.debug(f"Built {self!r}")

    def _compute_sup(self) -> ExtReal:
        if self.eta.kind == "square":
            return 1.0 / (float(self.eta.params["K"]) * self.anchor_c)
        if self.eta.diverges_at_infinity:
            return POS_INF
        self.sup_is_estimate = True
        estimate = self.evaluate(SUP_PROBE_X)
        logger.warning(
            f"sup(range G) for eta kind '{self.eta.kind}' estimated as G({SUP_PROBE_X:g}) = "
            f"{estimate:.10g}; possibly finite"
        )
        return estimate

    # --- Evaluation ---

    def evaluate(self, x: float) -> ExtReal:
        """G(x) for x >= 0.

        Raises:
            DomainError: If x < 0.
            NumericError: If the quadrature does not converge.
        """
        x = float(x)
        if x < 0 or math.isnan(x):
            raise DomainError("x", x, "G is defined on [0, inf]")
        if x == 0.0:
            return self.G0
        if x == math.inf:
            return self.cached_sup
        if x < EVAL_FLOOR and self.eta.osgood_at_zero:
            return NEG_INF

        k = int(np.clip(round(math.log2(x / self.anchor_c)), -KNOT_SPAN, KNOT_SPAN))
        idx = k + KNOT_SPAN
        return float(self._knot_values[idx] + self._quad_geometric(self._knots[idx], x))

    __call__ = evaluate

    def evaluate_many(self, xs: Sequence[float]) -> np.ndarray:
        """G on a sequence of points."""
        return np.array([self.evaluate(x) for x in xs], dtype=float)

    def inverse(self, y: ExtReal) -> ExtReal:
        """G^{-1}(y) with the sentinel conventions.

        y = -inf gives 0, y >= sup(range G) gives +inf (explosion) and, when
        G(0) is finite, y <= G(0) gives 0.

        Raises:
            ArgumentError: If y is NaN.
            NumericError: If root finding fails.
        """
        y = float(y)
        if math.isnan(y):
            raise ArgumentError("G_inverse of NaN")
        if y == NEG_INF:
            return 0.0
        if y >= self.cached_sup:
            return POS_INF
        if y <= self.G0:
            return 0.0

        lo, g_lo, hi = self._bracket(y)
        if hi is None:
            return lo

        def residual(v: float) -> float:
            return g_lo + self._quad(self._inv_eta, lo, v) - y

        if residual(hi) <= 0.0:
            return hi  # y sits on the upper knot up to rounding

        try:
            return float(
                optimize.brentq(
                    residual,
                    lo,
                    hi,
                    xtol=self.inv_abs_tol * lo,
                    rtol=BRENTQ_RTOL,
                    maxiter=200,
                )
            )
        except (RuntimeError, ValueError) as e:
            raise NumericError(f"G_inverse({y!r}) failed on [{lo:.6g}, {hi:.6g}]: {e}") from e

    def _bracket(self, y: float):
        """Returns (lo, G(lo), hi) with G(lo) <= y <= G(hi).

        Outside the knot cache the bracket is expanded geometrically. If the
        expansion leaves the floating range, returns (0.0 or +inf, nan, None).
        """
        idx = int(np.searchsorted(self._knot_values, y))
        if 0 < idx < self._knots.size:
            return float(self._knots[idx - 1]), float(self._knot_values[idx - 1]), float(self._knots[idx])

        if idx == 0:
            hi, g_hi = float(self._knots[0]), float(self._knot_values[0])
            while True:
                lo = hi / BRACKET_FACTOR
                if lo < EVAL_FLOOR:
                    return 0.0, math.nan, None
                g_lo = g_hi - self._quad(self._inv_eta, lo, hi)
                if g_lo <= y:
                    return lo, g_lo, hi
                hi, g_hi = lo, g_lo

        lo, g_lo = float(self._knots[-1]), float(self._knot_values[-1])
        while True:
            hi = lo * BRACKET_FACTOR
            if hi > BRACKET_LIMIT:
                logger.warning(f"G_inverse({y:.6g}) exceeds {BRACKET_LIMIT:g}; reported as +inf")
                return POS_INF, math.nan, None
            g_hi = g_lo + self._quad(self._inv_eta, lo, hi)
            if g_hi >= y:
                return lo, g_lo, hi
            lo, g_lo = hi, g_hi

    # --- G~_p relations ---

    def tilde_p(self, p: float, x: float) -> ExtReal:
        """G~_p(x) = (1 - p) G(x^(1/p)), computed through G."""
        p = check_exponent(p)
        x = float(x)
        if not x > 0:
            raise DomainError("x", x, "G~_p is defined on (0, inf)")
        try:
            lifted = x ** (1.0 / p)
        except OverflowError:
            lifted = math.inf
        return (1.0 - p) * self.evaluate(lifted)

    def tilde_p_inverse(self, p: float, y: ExtReal) -> ExtReal:
        """G~_p^{-1}(y) = G^{-1}(y / (1 - p))^p with sentinel propagation."""
        p = check_exponent(p)
        y = float(y)
        if y == NEG_INF:
            return 0.0
        base = self.inverse(y / (1.0 - p))
        if base == POS_INF:
            return POS_INF
        return base**p

    def tilde_p_quadrature(self, p: float, x: float) -> float:
        """int_{c^p}^x du / eta_p(u) by direct quadrature (independent of G).

        The interval is split at the points c^p * 2**k.
        """
        p = check_exponent(p)
        x = float(x)
        if not x > 0:
            raise DomainError("x", x, "G~_p is defined on (0, inf)")
        eta_p = make_eta_p(self.eta, p)

        def inv_eta_p(u: float) -> float:
            value = eta_p(u)
            return math.inf if value <= 0.0 else 1.0 / value

        start = self.anchor_c**p
        lo, hi, sign = (start, x, 1.0) if x >= start else (x, start, -1.0)
        n_pieces = max(1, int(math.ceil(math.log2(hi / lo))))
        cuts = np.geomspace(lo, hi, n_pieces + 1)
        total = sum(self._quad(inv_eta_p, a, b) for a, b in zip(cuts[:-1], cuts[1:]))
        return sign * total

    def explosion_level(self, H: float) -> ExtReal:
        """sup(range G) - G(H): the largest A(t) keeping G^{-1}(G(H) + A(t)) finite."""
        g = self.evaluate(H)
        if g == NEG_INF or self.cached_sup == POS_INF:
            return POS_INF
        return self.cached_sup - g

"""Small-tau closed forms for the qubit reduction and the NOT-gate scaling law.

The averaged forms are leading order in tau^2/nbar and are evaluated exactly
as derived for the two transition types: m = 1 (one photon per flip,
quadrupole or dipole) and m = 2 (two-photon Raman).
"""

from __future__ import annotations

import logging
import math
from functools import lru_cache

import numpy as np
from scipy.integrate import quad

from models import MODEL_JC, MODEL_RAMAN, EigenPair, ScalingPoint
from physics.errors import OutOfRegimeError

logger = logging.getLogger(__name__)

NOT_GATE_TAU = 0.5 * math.pi
SCALING_MIN_NBAR = 100.0
_LN2 = math.log(2.0)
_JC_LINEAR = 1.0 / 3.0 + 2.0 / (9.0 * _LN2)

MODEL_ORDER = {MODEL_JC: 1, MODEL_RAMAN: 2}


def model_order(model: str | int) -> int:
    if model in (1, 2):
        return int(model)
    try:
        return MODEL_ORDER[model]
    except KeyError:
        raise ValueError(f"unknown model {model!r}; expected one of {sorted(MODEL_ORDER)} or 1/2.") from None


def angular_factor(model: str | int, theta):
    half = 0.5 * np.asarray(theta, dtype=float)
    factor = np.sin(half) ** 4
    if model_order(model) == 2:
        factor = factor + np.cos(half) ** 4
    return factor


def perturbative_eigenvalues(model: str | int, theta: float, tau: float, nbar: float) -> EigenPair:
    """lambda_+- = 1/2 +- 1/2 sqrt(1 - 4 tau^2 A(theta) / nbar)."""

    if not nbar > 0:
        raise ValueError("nbar must be positive.")

    radicand_gap = 4.0 * tau**2 * float(angular_factor(model, theta)) / nbar
    clamped = radicand_gap > 1.0
    if clamped:
        logger.warning(
            "Perturbative eigenvalues out of regime (4 tau^2 A / nbar = %.3g > 1); clamping.",
            radicand_gap,
        )
        radicand_gap = 1.0

    root = math.sqrt(1.0 - radicand_gap)
    lambda_minus = radicand_gap / (2.0 * (1.0 + root))
    return EigenPair(lambda_plus=1.0 - lambda_minus, lambda_minus=lambda_minus, clamped=clamped)


@lru_cache(maxsize=1)
def raman_X_constant() -> float:
    """X = -2 int_0^1 x f log2 f dx with f = x^4 + (1 - x^2)^2."""

    def integrand(x: float) -> float:
        f = x**4 + (1.0 - x * x) ** 2
        return -2.0 * x * f * math.log2(f)

    value, abserr = quad(integrand, 0.0, 1.0, epsabs=1e-13, epsrel=1e-12, limit=200)
    logger.debug("Raman X constant %.12f (quadrature error %.1e)", value, abserr)
    return value


def analytic_average(m: str | int, tau: float, nbar: float) -> float:
    """Bloch-averaged entanglement from the small-tau eigenvalues."""

    order = model_order(m)
    if not nbar > 0:
        raise ValueError("nbar must be positive.")

    x = tau**2 / nbar
    if x >= 1.0:
        raise OutOfRegimeError(f"tau^2/nbar = {x:.3g} is not small; closed form does not apply.")
    if x == 0.0:
        return 0.0

    if order == 1:
        return _JC_LINEAR * x - x * math.log2(x) / 3.0
    return (2.0 / 3.0 + raman_X_constant()) * x - 2.0 * x * math.log2(x) / 3.0


def scaling_leading_term(m: str | int, nbar: float) -> float:
    """(m pi^2 / (12 nbar)) log2(4 nbar / pi^2)."""

    order = model_order(m)
    return order * math.pi**2 / (12.0 * nbar) * math.log2(4.0 * nbar / math.pi**2)


def not_gate_scaling(m: str | int, nbar: float) -> ScalingPoint:
    order = model_order(m)
    if nbar < SCALING_MIN_NBAR:
        logger.warning("Scaling law evaluated at nbar=%.3g; it assumes nbar >> 1.", nbar)

    return ScalingPoint(
        m=order,
        nbar=float(nbar),
        full=analytic_average(order, NOT_GATE_TAU, nbar),
        leading=scaling_leading_term(order, nbar),
    )


def scaling_scan(m: str | int, nbar_min: float, nbar_max: float, points: int) -> list[ScalingPoint]:
    if points < 2:
        raise ValueError("points must be at least 2.")
    if not 0 < nbar_min < nbar_max:
        raise ValueError("need 0 < nbar_min < nbar_max.")

    return [not_gate_scaling(m, float(nbar)) for nbar in np.geomspace(nbar_min, nbar_max, points)]

from __future__ import annotations

import math

import numpy as np
from scipy.special import entr, xlog1py

from physics.errors import InvalidProbabilityError

# Eigenvalues of numerically built 2x2 densities overshoot [0, 1] by roundoff only.
PROBABILITY_TOLERANCE = 1e-12
_LN2 = math.log(2.0)


def binary_entropy_bits(lambda_plus):
    """-p log2 p - (1-p) log2(1-p), with 0 log 0 = 0.

    Accepts a scalar or an array. Either eigenvalue may be passed; passing the
    smaller one keeps full relative precision for nearly pure states.
    """

    p = np.asarray(lambda_plus, dtype=float)
    if np.any(np.isnan(p)) or np.any(p < -PROBABILITY_TOLERANCE) or np.any(p > 1.0 + PROBABILITY_TOLERANCE):
        raise InvalidProbabilityError(f"probability outside [0, 1]: {lambda_plus!r}")

    p = np.clip(p, 0.0, 1.0)
    bits = (entr(p) - xlog1py(1.0 - p, -p)) / _LN2
    bits = np.clip(bits, 0.0, 1.0)
    return float(bits) if bits.ndim == 0 else bits

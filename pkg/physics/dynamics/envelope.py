"""Pulse-envelope bookkeeping: durations T and calT, scaled time, effective amplitude."""

from __future__ import annotations

import math

import numpy as np
from scipy.special import erf

from models import SHAPE_RECTANGULAR, CoherentSpec, EnvelopeTimes, PulseEnvelope


def _scalar_or_array(values):
    values = np.asarray(values, dtype=float)
    return float(values) if values.ndim == 0 else values


def envelope_times(env: PulseEnvelope) -> EnvelopeTimes:
    """T = int phi dt, calT = int phi^2 dt, and t_tilde(t) = int_{-inf}^t phi."""

    if env.shape == SHAPE_RECTANGULAR:
        duration = env.stop - env.start

        def t_tilde(t):
            return _scalar_or_array(np.clip(np.asarray(t, dtype=float) - env.start, 0.0, duration))

        return EnvelopeTimes(T=duration, calT=duration, t_tilde=t_tilde)

    area = env.width * math.sqrt(math.pi)
    energy = env.width * math.sqrt(0.5 * math.pi)

    def t_tilde(t):
        shifted = (np.asarray(t, dtype=float) - env.center) / env.width
        return _scalar_or_array(0.5 * area * (1.0 + erf(shifted)))

    return EnvelopeTimes(T=area, calT=energy, t_tilde=t_tilde)


def effective_alpha(flux: float, env: PulseEnvelope) -> CoherentSpec:
    """Amplitude of the pulse mode phi/sqrt(calT): alpha = sqrt(F) T / sqrt(calT)."""

    if flux < 0:
        raise ValueError("flux cannot be negative.")

    times = envelope_times(env)
    return CoherentSpec(alpha_mag=math.sqrt(flux) * times.T / math.sqrt(times.calT))

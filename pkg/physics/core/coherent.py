"""Coherent-state photon-number amplitudes and Fock-space truncation windows.

Amplitudes are built from log-magnitudes (log-gamma) so photon numbers around
10^9 stay finite; windows are sized from the exact Poisson tail mass, which
keeps their width proportional to sqrt(nbar).
"""

from __future__ import annotations

import logging
import math

import numpy as np
from scipy.special import gammaln
from scipy.stats import poisson

from models import CoherentSpec, FockWindow

logger = logging.getLogger(__name__)

DEFAULT_TAIL_EPS = 1e-12
_LOG_UNDERFLOW = -745.0
_MAX_WINDOW_ADJUST = 10_000


def _log_magnitude(alpha_mag: float, n):
    return -0.5 * alpha_mag**2 + n * math.log(alpha_mag) - 0.5 * gammaln(np.asarray(n, dtype=float) + 1.0)


def _relative_log_magnitude(nbar: float, numbers: np.ndarray) -> np.ndarray:
    """log|a_n| up to a constant, peak at zero.

    Built from the ratios |a_n / a_{n-1}| = sqrt(nbar / n); absolute log-magnitudes
    near nbar ~ 1e9 are ~1e10 and would carry 1e-6 relative noise per amplitude.
    """

    # Subnormal nbar overflows the ratio to inf; the tail then underflows to zero.
    with np.errstate(over="ignore"):
        steps = -0.5 * np.log1p((numbers[1:].astype(float) - nbar) / nbar)
    log_mag = np.concatenate(([0.0], np.cumsum(steps)))
    return log_mag - np.max(log_mag)


def coherent_amplitude(field: CoherentSpec, n: int) -> complex:
    """<n|alpha> = exp(-|alpha|^2/2) alpha^n / sqrt(n!)."""

    if n < 0:
        raise ValueError("photon number n cannot be negative.")

    if field.alpha_mag == 0.0:
        return 1.0 + 0.0j if n == 0 else 0.0j

    log_mag = float(_log_magnitude(field.alpha_mag, n))
    if log_mag < _LOG_UNDERFLOW:
        return 0.0j

    phase = math.fmod(n * field.alpha_phase, 2.0 * math.pi)
    return math.exp(log_mag) * complex(math.cos(phase), math.sin(phase))


def coherent_amplitudes(field: CoherentSpec, window: FockWindow, *, normalize: bool = True) -> np.ndarray:
    """Amplitudes over ``window``; with ``normalize`` the truncated vector has unit norm."""

    numbers = window.numbers()
    if field.alpha_mag == 0.0:
        amplitudes = np.where(numbers == 0, 1.0, 0.0).astype(complex)
        return amplitudes

    if normalize:
        log_mag = _relative_log_magnitude(field.nbar, numbers)
    else:
        log_mag = _log_magnitude(field.alpha_mag, numbers.astype(float))
    magnitudes = np.exp(np.maximum(log_mag, _LOG_UNDERFLOW)) * (log_mag >= _LOG_UNDERFLOW)

    # Offsets from n_min keep the products small; a shared constant phase error is harmless.
    base = math.fmod(window.n_min * field.alpha_phase, 2.0 * math.pi)
    phases = base + (numbers - window.n_min).astype(float) * field.alpha_phase
    amplitudes = magnitudes * np.exp(1j * phases)

    if normalize:
        norm = math.sqrt(math.fsum(np.abs(amplitudes) ** 2))
        if norm == 0.0:
            raise ValueError("window carries no coherent-state weight.")
        amplitudes = amplitudes / norm

    return amplitudes


def fock_window(field: CoherentSpec, tail_eps: float = DEFAULT_TAIL_EPS) -> FockWindow:
    """Smallest symmetric-in-probability window leaving out less than ``tail_eps`` mass."""

    if not 0.0 < tail_eps < 1.0:
        raise ValueError("tail_eps must lie strictly between 0 and 1.")

    nbar = field.nbar
    if nbar == 0.0:
        return FockWindow(0, 0)

    half = 0.5 * tail_eps
    n_min = max(0, int(poisson.ppf(half, nbar)))
    n_max = max(n_min, int(poisson.isf(half, nbar)))

    # ppf/isf are inverted numerically; walk to the exact tail boundaries.
    for _ in range(_MAX_WINDOW_ADJUST):
        if n_min > 0 and poisson.cdf(n_min - 1, nbar) >= half:
            n_min -= 1
        else:
            break
    for _ in range(_MAX_WINDOW_ADJUST):
        if poisson.sf(n_max, nbar) > half:
            n_max += 1
        else:
            break

    window = FockWindow(n_min, n_max)
    logger.debug("Fock window for nbar=%.6g: [%d, %d] (%d states)", nbar, n_min, n_max, window.size)
    return window


def window_mass(field: CoherentSpec, window: FockWindow) -> float:
    """Exact Poisson probability carried by ``window``."""

    nbar = field.nbar
    if nbar == 0.0:
        return 1.0 if window.n_min == 0 else 0.0

    below = poisson.cdf(window.n_min - 1, nbar) if window.n_min > 0 else 0.0
    above = poisson.sf(window.n_max, nbar)
    return float(1.0 - below - above)

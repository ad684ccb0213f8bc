"""Exact Jaynes-Cummings evolution, one 2x2 block (c1[n], c0[n+1]) at a time.

Block propagators follow the closed-form solution in the frame that carries
the exp(+-i delta t / 2) factors. Amplitudes whose partner lies outside the
window are frozen; their frame phase is 1, so frozen means unchanged.
"""

from __future__ import annotations

import logging

import numpy as np

from models import BlochState, CoherentSpec, FockWindow, JCJointState, JCParams
from physics.core.coherent import DEFAULT_TAIL_EPS, coherent_amplitudes, fock_window
from physics.dynamics.leakage import LeakageMonitor, check_leakage

logger = logging.getLogger(__name__)


def product_jc_state(
    ground: complex,
    excited: complex,
    field_amplitudes: np.ndarray,
    window: FockWindow,
) -> JCJointState:
    field_amplitudes = np.asarray(field_amplitudes, dtype=complex)
    return JCJointState(window=window, c0=ground * field_amplitudes, c1=excited * field_amplitudes)


def init_jc_state(
    atom: BlochState,
    field: CoherentSpec,
    tail_eps: float = DEFAULT_TAIL_EPS,
) -> JCJointState:
    # One extra photon on top holds the partner of the highest c1 amplitude.
    window = fock_window(field, tail_eps).padded(above=1)
    ground, excited = atom.amplitudes
    return product_jc_state(ground, excited, coherent_amplitudes(field, window), window)


def jc_block_propagator(numbers: np.ndarray, params: JCParams, t: float):
    """Entries (u11, u12, u21, u22) of the block propagator acting on (c1[n], c0[n+1])."""

    n = np.asarray(numbers, dtype=float)
    g, delta = params.g, params.delta
    coupling = 2.0 * g * np.sqrt(n + 1.0)
    rabi = np.sqrt(delta**2 + coupling**2)
    half_angle = 0.5 * rabi * t
    cos, sin = np.cos(half_angle), np.sin(half_angle)

    upper = np.exp(0.5j * delta * t)
    lower = np.conj(upper)
    detuned = 1j * (delta / rabi) * sin
    mixing = -1j * (coupling / rabi) * sin

    return (cos - detuned) * upper, mixing * upper, mixing * lower, (cos + detuned) * lower


def _relative_propagator(numbers: np.ndarray, params: JCParams, t_from: float, t_to: float):
    if params.delta == 0.0:
        return jc_block_propagator(numbers, params, t_to - t_from)

    # U(t_to) U(t_from)^dagger composes the frame phases exactly.
    p, q, r, s = jc_block_propagator(numbers, params, t_to)
    a, b, c, d = jc_block_propagator(numbers, params, t_from)
    a, b, c, d = np.conj(a), np.conj(b), np.conj(c), np.conj(d)
    return p * a + q * b, p * c + q * d, r * a + s * b, r * c + s * d


def jc_evolve(
    state: JCJointState,
    params: JCParams,
    t_tilde: float,
    *,
    monitor: LeakageMonitor | None = None,
) -> JCJointState:
    """Evolve by scaled time ``t_tilde``; returns a new state."""

    if t_tilde == 0.0:
        return state

    elapsed = state.elapsed + t_tilde
    blocks = state.window.numbers()[:-1]
    c0 = np.array(state.c0)
    c1 = np.array(state.c1)

    if blocks.size:
        u11, u12, u21, u22 = _relative_propagator(blocks, params, state.elapsed, elapsed)
        excited, ground = state.c1[:-1], state.c0[1:]
        c1[:-1] = u11 * excited + u12 * ground
        c0[1:] = u21 * excited + u22 * ground

    evolved = JCJointState(window=state.window, c0=c0, c1=c1, elapsed=elapsed)
    check_leakage(evolved, monitor)
    logger.debug("jc_evolve: %d blocks, t_tilde=%.6g, elapsed=%.6g", blocks.size, t_tilde, elapsed)
    return evolved

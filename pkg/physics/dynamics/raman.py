"""Two-mode Raman evolution under hbar*Omega*(s+ a1^dag a2 + s- a2^dag a1).

At two-photon resonance each pair (|0>, n1, n2) <-> (|1>, n1+1, n2-1) is a
pure rotation at rate Omega*sqrt((n1+1) n2). States are stored densely over
window1 x window2; index shifts (+1, -1) address the partner.
"""

from __future__ import annotations

import logging

import numpy as np

from models import BlochState, CoherentSpec, FockWindow, RamanJointState
from physics.core.coherent import DEFAULT_TAIL_EPS, coherent_amplitudes, fock_window
from physics.dynamics.leakage import LeakageMonitor, check_leakage

logger = logging.getLogger(__name__)


def product_raman_state(
    ground: complex,
    excited: complex,
    amplitudes1: np.ndarray,
    amplitudes2: np.ndarray,
    window1: FockWindow,
    window2: FockWindow,
) -> RamanJointState:
    joint = np.outer(np.asarray(amplitudes1, dtype=complex), np.asarray(amplitudes2, dtype=complex))
    return RamanJointState(window1=window1, window2=window2, c0=ground * joint, c1=excited * joint)


def init_raman_state(
    atom: BlochState,
    field1: CoherentSpec,
    field2: CoherentSpec,
    tail_eps: float = DEFAULT_TAIL_EPS,
) -> RamanJointState:
    # Beam 1 gains and beam 2 loses a photon when the atom is raised.
    window1 = fock_window(field1, tail_eps).padded(above=1)
    window2 = fock_window(field2, tail_eps).padded(below=1)
    ground, excited = atom.amplitudes
    return product_raman_state(
        ground,
        excited,
        coherent_amplitudes(field1, window1),
        coherent_amplitudes(field2, window2),
        window1,
        window2,
    )


def raman_number_state(atom: BlochState, n1: int, n2: int) -> RamanJointState:
    """Atom times the number state |n1, n2>, on the smallest window holding its partners."""

    window1 = FockWindow(n1, n1 + 1)
    window2 = FockWindow(max(0, n2 - 1), n2)
    amplitudes1 = np.where(window1.numbers() == n1, 1.0, 0.0)
    amplitudes2 = np.where(window2.numbers() == n2, 1.0, 0.0)
    ground, excited = atom.amplitudes
    return product_raman_state(ground, excited, amplitudes1, amplitudes2, window1, window2)


def raman_rates(state: RamanJointState, omega_eff: float) -> np.ndarray:
    """Rotation rates Omega*sqrt((n1+1) n2) for every coupled pair."""

    n1 = state.window1.numbers()[:-1].astype(float)
    n2 = state.window2.numbers()[1:].astype(float)
    return omega_eff * np.sqrt(np.outer(n1 + 1.0, n2))


def raman_evolve(
    state: RamanJointState,
    omega_eff: float,
    t_tilde: float,
    *,
    monitor: LeakageMonitor | None = None,
) -> RamanJointState:
    if not omega_eff > 0:
        raise ValueError("omega_eff must be positive.")

    if t_tilde == 0.0:
        return state

    c0 = np.array(state.c0)
    c1 = np.array(state.c1)

    if state.window1.size > 1 and state.window2.size > 1:
        angle = raman_rates(state, omega_eff) * t_tilde
        cos, sin = np.cos(angle), np.sin(angle)
        ground, excited = state.c0[:-1, 1:], state.c1[1:, :-1]
        c0[:-1, 1:] = cos * ground - 1j * sin * excited
        c1[1:, :-1] = cos * excited - 1j * sin * ground

    evolved = RamanJointState(
        window1=state.window1,
        window2=state.window2,
        c0=c0,
        c1=c1,
        elapsed=state.elapsed + t_tilde,
    )
    check_leakage(evolved, monitor)
    logger.debug(
        "raman_evolve: %dx%d grid, t_tilde=%.6g",
        state.window1.size,
        state.window2.size,
        t_tilde,
    )
    return evolved

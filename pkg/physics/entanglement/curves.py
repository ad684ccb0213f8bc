"""Entanglement as a function of scaled time, per initial state and Bloch-averaged.

Times are dimensionless: tau = g|alpha| t_tilde for the JC model and
tau = Omega |alpha|^2 t_tilde for Raman, so tau = pi/2 is a NOT gate. Both
models are simulated with unit coupling and t_tilde = tau / |alpha| (or
tau / nbar). For the vacuum the scale is the bare coupling.
"""

from __future__ import annotations

import logging
import math
from typing import Iterable

import numpy as np

from models import (
    MODEL_JC,
    MODEL_RAMAN,
    MODELS,
    BlochGrid,
    BlochState,
    CoherentSpec,
    EntanglementCurve,
    JCParams,
)
from physics.core.coherent import DEFAULT_TAIL_EPS
from physics.dynamics.jc import init_jc_state, jc_evolve
from physics.dynamics.leakage import LeakageMonitor
from physics.dynamics.raman import init_raman_state, raman_evolve
from physics.entanglement.reduction import entropy_of, qubit_entropies, reduce_to_qubit

logger = logging.getLogger(__name__)

GROUND = BlochState(theta=0.0)
EXCITED = BlochState(theta=math.pi)


def _check_model(model: str) -> None:
    if model not in MODELS:
        raise ValueError(f"unknown model {model!r}; expected one of {list(MODELS)}.")


def tau_to_t_tilde(model: str, field: CoherentSpec, tau: float) -> float:
    _check_model(model)
    if tau < 0:
        raise ValueError("tau cannot be negative.")

    if field.alpha_mag == 0.0:
        return tau
    if model == MODEL_JC:
        return tau / field.alpha_mag
    return tau / field.nbar


def _initial_state(model: str, atom: BlochState, field: CoherentSpec, tail_eps: float):
    if model == MODEL_JC:
        return init_jc_state(atom, field, tail_eps)
    return init_raman_state(atom, field, field, tail_eps)


def _evolve(model: str, state, t_tilde: float, delta: float, monitor: LeakageMonitor | None):
    if model == MODEL_JC:
        return jc_evolve(state, JCParams(g=1.0, delta=delta), t_tilde, monitor=monitor)
    return raman_evolve(state, 1.0, t_tilde, monitor=monitor)


def _state_label(atom: BlochState) -> str:
    return f"theta={atom.theta:.6g},phi={atom.phi:.6g}"


def entanglement_vs_time(
    atom: BlochState,
    field: CoherentSpec,
    model: str,
    tau_grid: Iterable[float],
    *,
    tail_eps: float = DEFAULT_TAIL_EPS,
    delta: float = 0.0,
    monitor: LeakageMonitor | None = None,
    label: str | None = None,
) -> EntanglementCurve:
    """E(tau) for one initial qubit state; Raman drives both beams with ``field``.

    ``delta`` is the JC detuning in units of g.
    """

    _check_model(model)
    taus = tuple(float(tau) for tau in tau_grid)
    if any(tau < 0 for tau in taus):
        raise ValueError("tau values cannot be negative.")

    monitor = monitor if monitor is not None else LeakageMonitor()
    initial = _initial_state(model, atom, field, tail_eps)

    entropies = []
    for tau in taus:
        # Each point evolves from the initial state, so errors do not accumulate.
        state = _evolve(model, initial, tau_to_t_tilde(model, field, tau), delta, monitor)
        entropies.append(entropy_of(reduce_to_qubit(state)))

    return EntanglementCurve(
        tau_values=taus,
        entropy_values=tuple(entropies),
        nbar=field.nbar,
        model=model,
        initial_state=label or _state_label(atom),
        max_leakage=monitor.max_mass,
    )


def _basis_rows(model: str, field: CoherentSpec, tau: float, tail_eps: float, delta: float, monitor):
    """Evolved |0>|alpha> and |1>|alpha>, flattened to rows of (X0, X1)."""

    t_tilde = tau_to_t_tilde(model, field, tau)
    evolved = [
        _evolve(model, _initial_state(model, atom, field, tail_eps), t_tilde, delta, monitor)
        for atom in (GROUND, EXCITED)
    ]
    ground_rows = np.stack([state.c0.ravel() for state in evolved])
    excited_rows = np.stack([state.c1.ravel() for state in evolved])
    return ground_rows, excited_rows


def _gram(left: np.ndarray, right: np.ndarray) -> np.ndarray:
    """G[i, j] = sum_n left[i, n] right[j, n], with numpy's pairwise summation.

    Determinants of nearly pure densities cancel to ~1e-10 at large nbar.
    """

    return np.array([[np.sum(left[i] * right[j]) for j in range(2)] for i in range(2)])


def node_entropies(
    field: CoherentSpec,
    model: str,
    tau: float,
    grid: BlochGrid,
    *,
    tail_eps: float = DEFAULT_TAIL_EPS,
    delta: float = 0.0,
    monitor: LeakageMonitor | None = None,
) -> np.ndarray:
    """Exact E_{theta,phi}(tau) at every grid node.

    Evolution is linear, so the joint state of node (theta, phi) is
    v0 * U|0,alpha> + v1 * U|1,alpha>. Reduced densities are quadratic forms of
    the node amplitudes v in 2x2 Gram matrices of the two evolved basis states.
    """

    _check_model(model)
    ground_rows, excited_rows = _basis_rows(model, field, tau, tail_eps, delta, monitor)

    gram_ground = _gram(ground_rows.conj(), ground_rows)
    gram_excited = _gram(excited_rows.conj(), excited_rows)
    cross = _gram(ground_rows, excited_rows.conj())

    thetas, phis = grid.thetas, grid.phis
    amplitudes = np.stack(
        [np.cos(0.5 * thetas) + 0j, np.sin(0.5 * thetas) * np.exp(1j * phis)],
        axis=1,
    )
    conj = amplitudes.conj()

    rho00 = np.einsum("ki,ij,kj->k", conj, gram_ground, amplitudes).real
    rho11 = np.einsum("ki,ij,kj->k", conj, gram_excited, amplitudes).real
    rho01 = np.einsum("ki,ij,kj->k", amplitudes, cross, conj)
    return qubit_entropies(rho00, rho11, rho01)


def average_entanglement(
    field: CoherentSpec,
    model: str,
    tau: float,
    grid: BlochGrid,
    *,
    tail_eps: float = DEFAULT_TAIL_EPS,
    delta: float = 0.0,
    monitor: LeakageMonitor | None = None,
) -> float:
    """Bloch-sphere average of the exact entanglement at scaled time ``tau``."""

    if tau == 0.0:
        return 0.0

    entropies = node_entropies(field, model, tau, grid, tail_eps=tail_eps, delta=delta, monitor=monitor)
    average = math.fsum(grid.weights * entropies)
    logger.debug("average_entanglement model=%s nbar=%.6g tau=%.6g -> %.6e", model, field.nbar, tau, average)
    return average


def average_entanglement_curve(
    field: CoherentSpec,
    model: str,
    tau_grid: Iterable[float],
    grid: BlochGrid,
    *,
    tail_eps: float = DEFAULT_TAIL_EPS,
    monitor: LeakageMonitor | None = None,
) -> EntanglementCurve:
    monitor = monitor if monitor is not None else LeakageMonitor()
    taus = tuple(float(tau) for tau in tau_grid)
    values = tuple(
        average_entanglement(field, model, tau, grid, tail_eps=tail_eps, monitor=monitor) for tau in taus
    )
    return EntanglementCurve(
        tau_values=taus,
        entropy_values=values,
        nbar=field.nbar,
        model=model,
        initial_state="averaged",
        max_leakage=monitor.max_mass,
    )

from __future__ import annotations

import math

import numpy as np

from models import JCJointState, QubitDensity, RamanJointState
from physics.core.entropy import binary_entropy_bits


def reduce_to_qubit(state: JCJointState | RamanJointState) -> QubitDensity:
    """Trace out the field: rho_ij = sum over photon numbers of c_i conj(c_j)."""

    c0 = state.c0.ravel()
    c1 = state.c1.ravel()
    return QubitDensity(
        rho00=math.fsum(np.abs(c0) ** 2),
        rho11=math.fsum(np.abs(c1) ** 2),
        rho01=complex(np.sum(c0 * np.conj(c1))),
    )


def minor_eigenvalues(rho00, rho11, rho01):
    """Smaller eigenvalue of trace-normalised 2x2 densities, computed without cancellation."""

    rho00 = np.asarray(rho00, dtype=float)
    rho11 = np.asarray(rho11, dtype=float)
    coherence = np.abs(np.asarray(rho01, dtype=complex)) ** 2
    trace = rho00 + rho11
    determinant = rho00 * rho11 - coherence
    major = 0.5 * trace + np.sqrt(0.25 * (rho00 - rho11) ** 2 + coherence)
    return determinant / (major * trace)


def entropy_of(rho: QubitDensity) -> float:
    """Von Neumann entropy in bits of a single-qubit density matrix."""

    return float(binary_entropy_bits(minor_eigenvalues(rho.rho00, rho.rho11, rho.rho01)))


def qubit_entropies(rho00, rho11, rho01) -> np.ndarray:
    return np.atleast_1d(binary_entropy_bits(minor_eigenvalues(rho00, rho11, rho01)))

from __future__ import annotations

import math

import numpy as np
from numpy.polynomial.legendre import leggauss

from models import BlochGrid

DEFAULT_N_THETA = 24
DEFAULT_N_PHI = 16


def bloch_grid(n_theta: int = DEFAULT_N_THETA, n_phi: int = DEFAULT_N_PHI) -> BlochGrid:
    """Gauss-Legendre in cos(theta) times periodic trapezoid in phi.

    Discretizes sin(theta) dtheta dphi / 4pi. Exact for polynomials in
    cos(theta) of degree < 2 n_theta and Fourier modes in phi of order < n_phi.
    """

    if n_theta < 2:
        raise ValueError("n_theta must be at least 2.")
    if n_phi < 1:
        raise ValueError("n_phi must be at least 1.")

    cos_nodes, cos_weights = leggauss(n_theta)
    thetas = np.arccos(np.clip(cos_nodes, -1.0, 1.0))
    phis = 2.0 * math.pi * np.arange(n_phi) / n_phi

    raw = [
        (float(theta), float(phi), float(weight) / n_phi)
        for theta, weight in zip(thetas, cos_weights)
        for phi in phis
    ]
    total = math.fsum(node[2] for node in raw)
    nodes = tuple((theta, phi, weight / total) for theta, phi, weight in raw)
    return BlochGrid(nodes=nodes, n_theta=n_theta, n_phi=n_phi)

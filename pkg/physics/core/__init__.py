# physics/core/__init__.py

from physics.core.coherent import (  # noqa: F401
    DEFAULT_TAIL_EPS,
    coherent_amplitude,
    coherent_amplitudes,
    fock_window,
    window_mass,
)
from physics.core.constants import CONSTANTS, PhysConstants  # noqa: F401
from physics.core.entropy import PROBABILITY_TOLERANCE, binary_entropy_bits  # noqa: F401
from physics.core.quadrature import DEFAULT_N_PHI, DEFAULT_N_THETA, bloch_grid  # noqa: F401

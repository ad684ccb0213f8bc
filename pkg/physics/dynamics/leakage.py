from __future__ import annotations

import logging

from models import JCJointState, RamanJointState
from physics.errors import WindowLeakageError

logger = logging.getLogger(__name__)

# Thresholds on probability mass |c|^2 held by frozen window-edge amplitudes.
LEAKAGE_WARN_MASS = 1e-10
LEAKAGE_FAIL_MASS = 1e-6


class LeakageMonitor:
    """Keeps the largest frozen-edge mass observed over a run."""

    def __init__(self) -> None:
        self.max_mass = 0.0
        self.observations = 0

    def observe(self, mass: float) -> None:
        self.observations += 1
        if mass > self.max_mass:
            self.max_mass = mass

    def as_dict(self) -> dict[str, float | int]:
        return {"max_mass": self.max_mass, "observations": self.observations}


def check_leakage(
    state: JCJointState | RamanJointState,
    monitor: LeakageMonitor | None = None,
) -> float:
    mass = state.frozen_edge_mass()
    if monitor is not None:
        monitor.observe(mass)

    if mass > LEAKAGE_FAIL_MASS:
        raise WindowLeakageError(mass, LEAKAGE_FAIL_MASS)

    if mass > LEAKAGE_WARN_MASS:
        logger.warning(
            "Frozen window-edge mass %.3e (largest amplitude %.3e) exceeds %.0e; results carry truncation error.",
            mass,
            state.frozen_edge_peak(),
            LEAKAGE_WARN_MASS,
        )

    return mass

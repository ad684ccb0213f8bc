from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class PhysConstants:
    """CODATA-2018 values in SI units."""

    hbar: float = 1.054571817e-34  # J s
    eps0: float = 8.8541878128e-12  # F / m
    c_light: float = 299792458.0  # m / s
    e_charge: float = 1.602176634e-19  # C
    a0: float = 5.29177210903e-11  # m

    def __post_init__(self) -> None:
        for name in ("hbar", "eps0", "c_light", "e_charge", "a0"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be strictly positive.")

    @property
    def e_a0(self) -> float:
        """Atomic unit of dipole moment, C m."""
        return self.e_charge * self.a0

    @property
    def e_a0_sq(self) -> float:
        """Atomic unit of quadrupole moment, C m^2."""
        return self.e_charge * self.a0**2


CONSTANTS = PhysConstants()

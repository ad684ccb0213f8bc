"""Domain exceptions raised by the simulation and closed-form code."""


class InvalidProbabilityError(ValueError):
    """A probability fell outside [0, 1] by more than the roundoff tolerance."""


class WindowLeakageError(RuntimeError):
    """Too much amplitude sits on frozen window-edge states after evolution."""

    def __init__(self, mass: float, threshold: float):
        super().__init__(
            f"window leakage {mass:.3e} exceeds {threshold:.1e}; widen the Fock window "
            "(lower the tail tolerance)"
        )
        self.mass = mass
        self.threshold = threshold


class OutOfRegimeError(ValueError):
    """A perturbative closed form was evaluated where tau^2/nbar >= 1."""

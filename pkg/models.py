# models.py

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

TWO_PI = 2.0 * math.pi

# Interaction models
MODEL_JC = "jc"
MODEL_RAMAN = "raman"
MODELS = (MODEL_JC, MODEL_RAMAN)

# Pulse envelope shapes
SHAPE_RECTANGULAR = "rectangular"
SHAPE_GAUSSIAN = "gaussian"


def _wrap_phase(value: float) -> float:
    wrapped = math.fmod(value, TWO_PI) % TWO_PI
    return 0.0 if wrapped >= TWO_PI else wrapped


def _frozen_array(values, dtype=complex) -> np.ndarray:
    array = np.array(values, dtype=dtype, copy=True)
    array.setflags(write=False)
    return array


@dataclass(frozen=True)
class CoherentSpec:
    """Single-mode coherent state |alpha> with alpha = alpha_mag * exp(i alpha_phase)."""

    alpha_mag: float
    alpha_phase: float = 0.0

    def __post_init__(self) -> None:
        if not math.isfinite(self.alpha_mag) or self.alpha_mag < 0:
            raise ValueError("alpha_mag must be a finite number >= 0.")
        object.__setattr__(self, "alpha_phase", _wrap_phase(self.alpha_phase))

    @classmethod
    def from_nbar(cls, nbar: float, phase: float = 0.0) -> "CoherentSpec":
        if nbar < 0:
            raise ValueError("nbar cannot be negative.")
        return cls(alpha_mag=math.sqrt(nbar), alpha_phase=phase)

    @property
    def nbar(self) -> float:
        return self.alpha_mag**2

    @property
    def alpha(self) -> complex:
        return self.alpha_mag * complex(math.cos(self.alpha_phase), math.sin(self.alpha_phase))


@dataclass(frozen=True)
class FockWindow:
    """Inclusive photon-number range [n_min, n_max] kept in a truncated state."""

    n_min: int
    n_max: int

    def __post_init__(self) -> None:
        if self.n_min < 0:
            raise ValueError("n_min cannot be negative.")
        if self.n_max < self.n_min:
            raise ValueError("n_max cannot be smaller than n_min.")

    @property
    def size(self) -> int:
        return self.n_max - self.n_min + 1

    def numbers(self) -> np.ndarray:
        return np.arange(self.n_min, self.n_max + 1, dtype=np.int64)

    def padded(self, below: int = 0, above: int = 0) -> "FockWindow":
        return FockWindow(max(0, self.n_min - below), self.n_max + above)

    def __contains__(self, n: int) -> bool:
        return self.n_min <= n <= self.n_max


@dataclass(frozen=True)
class BlochState:
    """Qubit state cos(theta/2)|0> + sin(theta/2) exp(i phi)|1>."""

    theta: float
    phi: float = 0.0

    def __post_init__(self) -> None:
        if not 0.0 <= self.theta <= math.pi:
            raise ValueError("theta must lie in [0, pi].")
        object.__setattr__(self, "phi", _wrap_phase(self.phi))

    @property
    def amplitudes(self) -> tuple[complex, complex]:
        half = 0.5 * self.theta
        # Exact zeros at the poles keep basis states free of cos(pi/2) roundoff.
        ground = 0.0 if self.theta == math.pi else math.cos(half)
        excited = 0.0 if self.theta == 0.0 else math.sin(half)
        return complex(ground), excited * complex(math.cos(self.phi), math.sin(self.phi))


@dataclass(frozen=True)
class BlochGrid:
    """Product quadrature over the Bloch sphere; weights sum to one."""

    nodes: tuple[tuple[float, float, float], ...]
    n_theta: int
    n_phi: int

    @property
    def thetas(self) -> np.ndarray:
        return np.array([node[0] for node in self.nodes])

    @property
    def phis(self) -> np.ndarray:
        return np.array([node[1] for node in self.nodes])

    @property
    def weights(self) -> np.ndarray:
        return np.array([node[2] for node in self.nodes])

    def average(self, func: Callable[[float, float], float]) -> float:
        return math.fsum(weight * func(theta, phi) for theta, phi, weight in self.nodes)


@dataclass(frozen=True)
class JCParams:
    g: float
    delta: float = 0.0

    def __post_init__(self) -> None:
        if not self.g > 0:
            raise ValueError("g must be positive.")


@dataclass(frozen=True)
class PulseEnvelope:
    """Dimensionless envelope phi(t), normalised so that max phi = 1.

    Rectangular pulses use ``start``/``stop``; gaussian pulses use ``center``
    and ``width``, the 1/e half-width of phi(t) = exp(-(t - center)^2 / width^2).
    """

    shape: str
    start: float = 0.0
    stop: float = 0.0
    center: float = 0.0
    width: float = 0.0

    def __post_init__(self) -> None:
        if self.shape == SHAPE_RECTANGULAR:
            if not self.stop > self.start:
                raise ValueError("rectangular envelope needs stop > start.")
        elif self.shape == SHAPE_GAUSSIAN:
            if not self.width > 0:
                raise ValueError("gaussian envelope needs width > 0.")
        else:
            raise ValueError(f"unknown envelope shape {self.shape!r}.")

    @classmethod
    def rectangular(cls, start: float, stop: float) -> "PulseEnvelope":
        return cls(shape=SHAPE_RECTANGULAR, start=start, stop=stop)

    @classmethod
    def gaussian(cls, center: float, width: float) -> "PulseEnvelope":
        return cls(shape=SHAPE_GAUSSIAN, center=center, width=width)

    def value(self, t):
        t = np.asarray(t, dtype=float)
        if self.shape == SHAPE_RECTANGULAR:
            result = ((t >= self.start) & (t <= self.stop)).astype(float)
        else:
            result = np.exp(-(((t - self.center) / self.width) ** 2))
        return float(result) if result.ndim == 0 else result


@dataclass(frozen=True)
class EnvelopeTimes:
    T: float
    calT: float
    t_tilde: Callable[[float], float] = field(repr=False)

    @property
    def mode_normalization(self) -> float:
        """Factor 1/sqrt(calT) turning phi(t) into the unit-norm mode function."""
        return 1.0 / math.sqrt(self.calT)


@dataclass(frozen=True, eq=False)
class JCJointState:
    """Atom-field amplitudes c0[n], c1[n] for n in ``window``.

    ``elapsed`` is the scaled time since preparation; evolution needs it to
    compose interaction-picture propagators exactly when the detuning is nonzero.
    """

    window: FockWindow
    c0: np.ndarray
    c1: np.ndarray
    elapsed: float = 0.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "c0", _frozen_array(self.c0))
        object.__setattr__(self, "c1", _frozen_array(self.c1))
        if self.c0.shape != (self.window.size,) or self.c1.shape != (self.window.size,):
            raise ValueError("amplitude arrays must match the window size.")

    def norm(self) -> float:
        return float(np.sum(np.abs(self.c0) ** 2) + np.sum(np.abs(self.c1) ** 2))

    def frozen_edge_mass(self) -> float:
        """Mass on amplitudes whose coupling partner lies outside the window."""
        mass = abs(self.c1[-1]) ** 2
        if self.window.n_min > 0:
            mass += abs(self.c0[0]) ** 2
        return float(mass)

    def frozen_edge_peak(self) -> float:
        peak = abs(self.c1[-1])
        if self.window.n_min > 0:
            peak = max(peak, abs(self.c0[0]))
        return float(peak)


@dataclass(frozen=True, eq=False)
class RamanJointState:
    """Atom plus two field modes; c0[i1, i2] and c1[i1, i2] over window1 x window2."""

    window1: FockWindow
    window2: FockWindow
    c0: np.ndarray
    c1: np.ndarray
    elapsed: float = 0.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "c0", _frozen_array(self.c0))
        object.__setattr__(self, "c1", _frozen_array(self.c1))
        shape = (self.window1.size, self.window2.size)
        if self.c0.shape != shape or self.c1.shape != shape:
            raise ValueError("amplitude arrays must match window1 x window2.")

    def norm(self) -> float:
        return float(np.sum(np.abs(self.c0) ** 2) + np.sum(np.abs(self.c1) ** 2))

    def _frozen_masks(self) -> tuple[np.ndarray, np.ndarray]:
        ground = np.zeros(self.c0.shape, dtype=bool)
        excited = np.zeros(self.c1.shape, dtype=bool)
        ground[-1, :] = True
        if self.window2.n_min > 0:
            ground[:, 0] = True
        excited[:, -1] = True
        if self.window1.n_min > 0:
            excited[0, :] = True
        return ground, excited

    def frozen_edge_mass(self) -> float:
        ground, excited = self._frozen_masks()
        return float(np.sum(np.abs(self.c0[ground]) ** 2) + np.sum(np.abs(self.c1[excited]) ** 2))

    def frozen_edge_peak(self) -> float:
        ground, excited = self._frozen_masks()
        return float(max(np.max(np.abs(self.c0[ground])), np.max(np.abs(self.c1[excited]))))

    def total_photons(self) -> np.ndarray:
        """n1 + n2 on the storage grid."""
        return self.window1.numbers()[:, None] + self.window2.numbers()[None, :]


@dataclass(frozen=True)
class QubitDensity:
    rho00: float
    rho11: float
    rho01: complex

    @property
    def rho10(self) -> complex:
        return self.rho01.conjugate()

    @property
    def trace(self) -> float:
        return self.rho00 + self.rho11

    @property
    def determinant(self) -> float:
        return self.rho00 * self.rho11 - abs(self.rho01) ** 2

    def as_matrix(self) -> np.ndarray:
        return np.array([[self.rho00, self.rho01], [self.rho10, self.rho11]], dtype=complex)


@dataclass(frozen=True)
class EntanglementCurve:
    tau_values: tuple[float, ...]
    entropy_values: tuple[float, ...]
    nbar: float
    model: str
    initial_state: str
    max_leakage: float = 0.0


@dataclass(frozen=True)
class EigenPair:
    lambda_plus: float
    lambda_minus: float
    clamped: bool = False


@dataclass(frozen=True)
class ScalingPoint:
    m: int
    nbar: float
    full: float
    leading: float

    @property
    def ratio(self) -> float:
        return self.leading / self.full if self.full else float("nan")


@dataclass(frozen=True)
class GateReport:
    kind: str
    d_eff: float
    omega_L: float
    T_not: float
    nbar: float
    entanglement_E: float
    p_spon: float
    validity_ratios: tuple[float, float]
    coupling_g: float
    gamma_eff: float | None = None
    simulated_E: float | None = None
    warnings: tuple[str, ...] = ()
    notes: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        for name in ("d_eff", "omega_L", "T_not", "nbar", "entanglement_E", "p_spon"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} cannot be negative.")
        if self.p_spon > 1:
            raise ValueError("p_spon cannot exceed 1.")

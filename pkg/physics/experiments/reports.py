"""NOT-gate budgets for quadrupole, dipole and Raman experiments (SI units throughout)."""

from __future__ import annotations

import logging
import math

from config import Config
from models import MODEL_JC, MODEL_RAMAN, CoherentSpec, GateReport
from physics.core.constants import CONSTANTS
from physics.core.quadrature import bloch_grid
from physics.dynamics.leakage import LeakageMonitor
from physics.entanglement.analytic import NOT_GATE_TAU, analytic_average
from physics.entanglement.curves import average_entanglement
from schemas import DipoleConfig, ExperimentConfig, QuadrupoleConfig, RamanConfig

logger = logging.getLogger(__name__)

# The one-dimensional beam model breaks down as the focal area approaches lambda^2.
MIN_AREA_OVER_LAMBDA_SQ = 10.0
# Adiabatic elimination of the Raman excited state wants delta >> Gamma.
MIN_DETUNING_OVER_GAMMA = 100.0


def laser_angular_frequency(wavelength: float) -> float:
    return 2.0 * math.pi * CONSTANTS.c_light / wavelength


def photon_flux(power: float, omega_L: float) -> float:
    return power / (CONSTANTS.hbar * omega_L)


def coupling_from_flux(d: float, omega_L: float, flux: float, area: float) -> float:
    """g|alpha| in rad/s from hbar g|alpha| = sqrt(hbar omega_L F d^2 / (2 eps0 c A))."""

    if min(d, omega_L, area) <= 0 or flux < 0:
        raise ValueError("d, omega_L and area must be positive and flux non-negative.")

    energy_sq = CONSTANTS.hbar * omega_L * flux * d**2 / (2.0 * CONSTANTS.eps0 * CONSTANTS.c_light * area)
    return math.sqrt(energy_sq) / CONSTANTS.hbar


def single_mode_validity(bandwidth_B: float, T: float, g: float, nbar: float) -> tuple[float, float]:
    """(B T / 2pi, B / (g sqrt(nbar + 1))); both must be << 1 for one effective mode."""

    if bandwidth_B < 0 or T <= 0 or g <= 0 or nbar < 0:
        raise ValueError("need B >= 0, T > 0, g > 0 and nbar >= 0.")

    return bandwidth_B * T / (2.0 * math.pi), bandwidth_B / (g * math.sqrt(nbar + 1.0))


def scaled_config(cfg: ExperimentConfig, area_factor: float = 1.0, power_factor: float = 1.0) -> ExperimentConfig:
    """Same experiment with the focal area and beam power multiplied by the given factors."""

    if not area_factor > 0 or not power_factor > 0:
        raise ValueError("area_factor and power_factor must be positive.")

    return cfg.model_copy(update={"area_A": cfg.area_A * area_factor, "power_P": cfg.power_P * power_factor})


def _area_warnings(cfg: ExperimentConfig) -> list[str]:
    ratio = cfg.area_A / cfg.wavelength**2
    if ratio < MIN_AREA_OVER_LAMBDA_SQ:
        return [f"focal area is only {ratio:.3g} lambda^2; the one-dimensional beam model is not reliable"]
    return []


def _simulated_entanglement(
    model: str,
    nbar: float,
    ceiling: float,
    notes: list[str],
    monitor: LeakageMonitor | None,
) -> float | None:
    if nbar > ceiling:
        notes.append(f"simulation skipped: nbar={nbar:.3g} exceeds the {model} ceiling {ceiling:.3g}; analytic only")
        return None

    monitor = monitor if monitor is not None else LeakageMonitor()
    value = average_entanglement(
        CoherentSpec.from_nbar(nbar),
        model,
        NOT_GATE_TAU,
        bloch_grid(Config.N_THETA, Config.N_PHI),
        tail_eps=Config.TAIL_EPS,
        monitor=monitor,
    )
    notes.append(f"simulated with max window leakage {monitor.max_mass:.3e}")
    return value


def _log_warnings(kind: str, warnings: list[str]) -> None:
    for message in warnings:
        logger.warning("%s report: %s", kind, message)


def _single_photon_report(
    kind: str,
    cfg: QuadrupoleConfig | DipoleConfig,
    d_eff: float,
    simulate: bool,
    monitor: LeakageMonitor | None = None,
) -> GateReport:
    const = CONSTANTS
    omega_L = laser_angular_frequency(cfg.wavelength)

    T_not = (math.pi * const.hbar / d_eff) * math.sqrt(const.eps0 * const.c_light * cfg.area_A / (2.0 * cfg.power_P))
    nbar = (math.pi / (omega_L * d_eff)) * math.sqrt(const.eps0 * const.c_light * cfg.area_A * cfg.power_P / 2.0)

    g_alpha = coupling_from_flux(d_eff, omega_L, photon_flux(cfg.power_P, omega_L), cfg.area_A)
    g = g_alpha / math.sqrt(nbar)

    warnings = _area_warnings(cfg)
    ratios = single_mode_validity(cfg.bandwidth_B, T_not, g, nbar)
    if max(ratios) >= 1.0:
        warnings.append(f"single-mode conditions violated: B T/2pi={ratios[0]:.3g}, B/(g sqrt(nbar+1))={ratios[1]:.3g}")
    _log_warnings(kind, warnings)

    notes: list[str] = []
    simulated = None
    if simulate:
        simulated = _simulated_entanglement(MODEL_JC, nbar, Config.SIMULATE_MAX_NBAR_JC, notes, monitor)

    return GateReport(
        kind=kind,
        d_eff=d_eff,
        omega_L=omega_L,
        T_not=T_not,
        nbar=nbar,
        entanglement_E=analytic_average(1, NOT_GATE_TAU, nbar),
        p_spon=min(1.0, T_not / (2.0 * cfg.lifetime_tau0)),
        validity_ratios=ratios,
        coupling_g=g,
        simulated_E=simulated,
        warnings=tuple(warnings),
        notes=tuple(notes),
    )


def quadrupole_report(
    cfg: QuadrupoleConfig, *, simulate: bool = False, monitor: LeakageMonitor | None = None
) -> GateReport:
    """Quadrupole transition: effective dipole d = 2 pi Q / lambda."""

    d_eff = 2.0 * math.pi * cfg.quadrupole_Q / cfg.wavelength
    return _single_photon_report("quadrupole", cfg, d_eff, simulate, monitor)


def dipole_report(cfg: DipoleConfig, *, simulate: bool = False, monitor: LeakageMonitor | None = None) -> GateReport:
    return _single_photon_report("dipole", cfg, cfg.dipole_d, simulate, monitor)


def raman_report(cfg: RamanConfig, *, simulate: bool = False, monitor: LeakageMonitor | None = None) -> GateReport:
    """Two equal beams of power P each, detuned by delta from the excited state.

    Omega |alpha|^2 = d^2 P / (2 hbar^2 eps0 c A delta) fixes T through
    Omega |alpha|^2 T = pi/2; spontaneous emission uses the effective rate
    (Gamma/delta) Omega |alpha|^2 for half the gate.
    """

    const = CONSTANTS
    omega_0 = laser_angular_frequency(cfg.wavelength)
    delta = cfg.detuning_delta

    T_not = const.hbar**2 * delta * math.pi * const.eps0 * const.c_light * cfg.area_A / (cfg.dipole_d**2 * cfg.power_P)
    nbar = const.hbar * delta * math.pi * const.eps0 * const.c_light * cfg.area_A / (cfg.dipole_d**2 * omega_0)

    raman_rate = NOT_GATE_TAU / T_not
    omega_eff = raman_rate / nbar
    gamma_eff = (cfg.gamma_excited / delta) * raman_rate

    warnings = _area_warnings(cfg)
    if delta < MIN_DETUNING_OVER_GAMMA * cfg.gamma_excited:
        warnings.append(f"detuning is only {delta / cfg.gamma_excited:.3g} Gamma; adiabatic elimination is marginal")

    # The two-photon blocks rotate at Omega (nbar + 1); the bandwidth must not resolve that rate.
    ratios = (
        cfg.bandwidth_B * T_not / (2.0 * math.pi),
        cfg.bandwidth_B / (omega_eff * (nbar + 1.0)),
    )
    if max(ratios) >= 1.0:
        warnings.append(f"single-mode conditions violated: B T/2pi={ratios[0]:.3g}, B/(Omega(nbar+1))={ratios[1]:.3g}")
    _log_warnings("raman", warnings)

    notes: list[str] = []
    simulated = None
    if simulate:
        simulated = _simulated_entanglement(MODEL_RAMAN, nbar, Config.SIMULATE_MAX_NBAR_RAMAN, notes, monitor)

    return GateReport(
        kind="raman",
        d_eff=cfg.dipole_d,
        omega_L=omega_0,
        T_not=T_not,
        nbar=nbar,
        entanglement_E=analytic_average(2, NOT_GATE_TAU, nbar),
        p_spon=min(1.0, 0.25 * math.pi * cfg.gamma_excited / delta),
        validity_ratios=ratios,
        coupling_g=omega_eff,
        gamma_eff=gamma_eff,
        simulated_E=simulated,
        warnings=tuple(warnings),
        notes=tuple(notes),
    )


REPORTS = {
    "quadrupole": quadrupole_report,
    "dipole": dipole_report,
    "raman": raman_report,
}


def experiment_report(
    kind: str,
    cfg: ExperimentConfig,
    *,
    simulate: bool = False,
    monitor: LeakageMonitor | None = None,
) -> GateReport:
    """Report for ``kind``; a simulation records its window leakage on ``monitor``."""

    try:
        report = REPORTS[kind]
    except KeyError:
        raise ValueError(f"unknown experiment kind {kind!r}; expected one of {sorted(REPORTS)}.") from None
    return report(cfg, simulate=simulate, monitor=monitor)

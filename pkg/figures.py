"""Series builders for the entanglement figures and the scaling scan.

Each builder returns plain ``Series`` records; ``outputs.write_csv`` turns
them into rows. Nothing here touches the filesystem.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from models import MODEL_JC, MODEL_RAMAN, BlochGrid, BlochState, CoherentSpec
from physics.core.coherent import DEFAULT_TAIL_EPS
from physics.dynamics.leakage import LeakageMonitor
from physics.entanglement.analytic import NOT_GATE_TAU, analytic_average, model_order, scaling_scan
from physics.entanglement.curves import average_entanglement_curve, entanglement_vs_time

logger = logging.getLogger(__name__)

KIND_NUMERIC = "numeric"
KIND_ANALYTIC = "analytic"

FIG1_NBAR = 10.0
FIG2_NBARS = (2.0**3, 2.0**7, 2.0**12)
FIG3_NBARS = (2.0**3, 2.0**8)
NUMERIC_TIME_COUNT = 16

# Canonical Bloch axes: poles plus three equatorial phases.
FIG1_STATES = (
    ("ground", BlochState(theta=0.0)),
    ("excited", BlochState(theta=math.pi)),
    ("plus_x", BlochState(theta=0.5 * math.pi, phi=0.0)),
    ("minus_x", BlochState(theta=0.5 * math.pi, phi=math.pi)),
    ("plus_y", BlochState(theta=0.5 * math.pi, phi=0.5 * math.pi)),
)


@dataclass(frozen=True)
class Series:
    name: str
    kind: str
    nbar: float
    taus: tuple[float, ...]
    values: tuple[float, ...]

    def rows(self):
        for tau, value in zip(self.taus, self.values):
            yield (self.name, self.kind, self.nbar, tau, value)


def figure_rows(series: list[Series]):
    for item in series:
        yield from item.rows()


def halving_times(count: int = NUMERIC_TIME_COUNT) -> tuple[float, ...]:
    """tau_n = 2^-n pi for n = 1..count."""

    return tuple(math.pi * 2.0**-n for n in range(1, count + 1))


def _analytic_series(model: str, nbar: float, points: int, tau_min: float, tau_max: float) -> Series:
    taus = tuple(float(tau) for tau in np.geomspace(tau_min, tau_max, points))
    order = model_order(model)
    values = tuple(analytic_average(order, tau, nbar) for tau in taus)
    return Series(name=f"{model}_nbar_{nbar:g}", kind=KIND_ANALYTIC, nbar=nbar, taus=taus, values=values)


def fig1_series(
    grid: BlochGrid,
    *,
    tau_max: float = math.pi,
    points: int = 121,
    tail_eps: float = DEFAULT_TAIL_EPS,
    monitor: LeakageMonitor | None = None,
) -> list[Series]:
    """Five single-state JC curves at nbar = 10 plus their Bloch average."""

    if points < 2 or not tau_max > 0:
        raise ValueError("fig1 needs at least two points and tau_max > 0.")

    field = CoherentSpec.from_nbar(FIG1_NBAR)
    taus = tuple(float(tau) for tau in np.linspace(0.0, tau_max, points))

    series = []
    for label, atom in FIG1_STATES:
        curve = entanglement_vs_time(atom, field, MODEL_JC, taus, tail_eps=tail_eps, monitor=monitor, label=label)
        series.append(Series(label, KIND_NUMERIC, FIG1_NBAR, curve.tau_values, curve.entropy_values))

    averaged = average_entanglement_curve(field, MODEL_JC, taus, grid, tail_eps=tail_eps, monitor=monitor)
    series.append(Series("averaged", KIND_NUMERIC, FIG1_NBAR, averaged.tau_values, averaged.entropy_values))
    return series


def averaged_vs_closed_form(
    model: str,
    nbars: tuple[float, ...],
    grid: BlochGrid,
    *,
    analytic_points: int = 200,
    tail_eps: float = DEFAULT_TAIL_EPS,
    monitor: LeakageMonitor | None = None,
) -> list[Series]:
    """Numeric Bloch averages at the halving times next to dense closed-form curves."""

    taus = halving_times()
    series = []
    for nbar in nbars:
        logger.info("Averaging %s model at nbar=%g over %d times", model, nbar, len(taus))
        curve = average_entanglement_curve(
            CoherentSpec.from_nbar(nbar), model, taus, grid, tail_eps=tail_eps, monitor=monitor
        )
        series.append(Series(f"{model}_nbar_{nbar:g}", KIND_NUMERIC, nbar, curve.tau_values, curve.entropy_values))
        series.append(_analytic_series(model, nbar, analytic_points, min(taus), NOT_GATE_TAU))
    return series


def fig2_series(grid: BlochGrid, **kwargs) -> list[Series]:
    return averaged_vs_closed_form(MODEL_JC, FIG2_NBARS, grid, **kwargs)


def fig3_series(grid: BlochGrid, **kwargs) -> list[Series]:
    return averaged_vs_closed_form(MODEL_RAMAN, FIG3_NBARS, grid, **kwargs)


def scaling_rows(m: int, nbar_min: float, nbar_max: float, points: int):
    for point in scaling_scan(m, nbar_min, nbar_max, points):
        yield (point.m, point.nbar, point.full, point.leading, point.ratio)

from __future__ import annotations

import logging
import os
import time
from contextlib import contextmanager

import click
from dotenv import load_dotenv

# Config reads the environment at import time.
load_dotenv()

from config import VERSION, Config  # noqa: E402
from figures import (  # noqa: E402
    fig1_series,
    fig2_series,
    fig3_series,
    figure_rows,
    scaling_rows,
)
from logging_config import bind_run_context, clear_run_context, setup_logging  # noqa: E402
from outputs import FIGURE_COLUMNS, SCALING_COLUMNS, RunManifest, report_as_dict, write_csv, write_json  # noqa: E402
from physics.core.quadrature import bloch_grid  # noqa: E402
from physics.dynamics.leakage import LeakageMonitor  # noqa: E402
from physics.errors import InvalidProbabilityError, OutOfRegimeError, WindowLeakageError  # noqa: E402
from physics.experiments.reports import experiment_report, scaled_config  # noqa: E402
from schemas import KINDS, ConfigError, load_experiment_config  # noqa: E402

logger = logging.getLogger("qce")

BUNDLED_CONFIGS = {
    "quadrupole": "ca40_quadrupole.json",
    "dipole": "cs_dipole.json",
    "raman": "raman_800nm.json",
}

DOMAIN_ERRORS = (ConfigError, WindowLeakageError, OutOfRegimeError, InvalidProbabilityError, ValueError)


@contextmanager
def _run(command: str, out_dir: str, parameters: dict):
    """Bind the run context, time the command and write its manifest."""

    run_id = bind_run_context(command)
    monitor = LeakageMonitor()
    manifest = RunManifest(command=command, parameters=parameters, run_id=run_id)
    started = time.perf_counter()
    logger.info("run started", extra={"parameters": parameters})
    try:
        yield manifest, monitor
    except DOMAIN_ERRORS as exc:
        logger.error("run failed: %s", exc)
        raise click.ClickException(str(exc)) from exc
    else:
        manifest.duration_s = round(time.perf_counter() - started, 6)
        manifest.leakage = monitor.as_dict()
        path = manifest.write(out_dir)
        logger.info("run completed", extra={"duration_s": manifest.duration_s, "manifest": path})
    finally:
        clear_run_context()


def _grid_options(func):
    func = click.option("--tail-eps", type=float, default=None, help="Poisson tail mass left out of Fock windows.")(func)
    func = click.option("--nphi", type=click.IntRange(min=1), default=None, help="Trapezoid nodes in phi.")(func)
    func = click.option("--ntheta", type=click.IntRange(min=2), default=None, help="Gauss-Legendre nodes in cos(theta).")(func)
    func = click.option("--out", "out_dir", type=click.Path(file_okay=False), default=None, help="Output directory.")(func)
    return func


def _resolve(out_dir, ntheta, nphi, tail_eps):
    tail_eps = Config.TAIL_EPS if tail_eps is None else tail_eps
    if not 0.0 < tail_eps < 1.0:
        raise click.BadParameter("must lie strictly between 0 and 1", param_hint="--tail-eps")
    return (
        out_dir or Config.OUTPUT_DIR,
        bloch_grid(ntheta or Config.N_THETA, nphi or Config.N_PHI),
        tail_eps,
    )


@click.group()
@click.option("--log-level", default=None, help="Logging level (defaults to LOG_LEVEL or INFO).")
@click.option("--log-json/--no-log-json", default=None, help="Emit JSON log lines.")
@click.version_option(VERSION, prog_name="qce")
def cli(log_level: str | None, log_json: bool | None) -> None:
    """Laser-qubit entanglement: figures, experiment budgets and scaling scans."""

    setup_logging(log_level, log_json)


@cli.command("fig1")
@_grid_options
@click.option("--tau-max", type=float, default=None, help="Largest scaled time.")
@click.option("--points", type=click.IntRange(min=2), default=None, help="Number of tau samples.")
def fig1(out_dir, ntheta, nphi, tail_eps, tau_max, points) -> None:
    """Entanglement vs scaled time for five initial states at nbar = 10."""

    out_dir, grid, tail_eps = _resolve(out_dir, ntheta, nphi, tail_eps)
    tau_max = Config.TAU_MAX if tau_max is None else tau_max
    points = points or Config.FIG1_POINTS
    if not tau_max > 0:
        raise click.BadParameter("must be positive", param_hint="--tau-max")

    parameters = {"n_theta": grid.n_theta, "n_phi": grid.n_phi, "tail_eps": tail_eps, "tau_max": tau_max, "points": points}
    with _run("fig1", out_dir, parameters) as (manifest, monitor):
        series = fig1_series(grid, tau_max=tau_max, points=points, tail_eps=tail_eps, monitor=monitor)
        manifest.outputs.append(write_csv(os.path.join(out_dir, "fig1.csv"), FIGURE_COLUMNS, figure_rows(series)))
    click.echo(f"fig1: {len(series)} series written to {out_dir}")


def _closed_form_figure(name: str, builder, out_dir, ntheta, nphi, tail_eps) -> None:
    out_dir, grid, tail_eps = _resolve(out_dir, ntheta, nphi, tail_eps)
    parameters = {
        "n_theta": grid.n_theta,
        "n_phi": grid.n_phi,
        "tail_eps": tail_eps,
        "analytic_points": Config.ANALYTIC_POINTS,
    }
    with _run(name, out_dir, parameters) as (manifest, monitor):
        series = builder(grid, analytic_points=Config.ANALYTIC_POINTS, tail_eps=tail_eps, monitor=monitor)
        manifest.outputs.append(write_csv(os.path.join(out_dir, f"{name}.csv"), FIGURE_COLUMNS, figure_rows(series)))
    click.echo(f"{name}: {len(series)} series written to {out_dir}")


@cli.command("fig2")
@_grid_options
def fig2(out_dir, ntheta, nphi, tail_eps) -> None:
    """Bloch-averaged JC entanglement against the closed form, nbar = 2^3, 2^7, 2^12."""

    _closed_form_figure("fig2", fig2_series, out_dir, ntheta, nphi, tail_eps)


@cli.command("fig3")
@_grid_options
def fig3(out_dir, ntheta, nphi, tail_eps) -> None:
    """Bloch-averaged Raman entanglement against the closed form, nbar = 2^3, 2^8."""

    _closed_form_figure("fig3", fig3_series, out_dir, ntheta, nphi, tail_eps)


@cli.command("experiment")
@click.option("--kind", type=click.Choice(KINDS), required=True)
@click.option(
    "--config",
    "config_path",
    type=click.Path(dir_okay=False),
    default=None,
    help="JSON config in human units; defaults to the bundled config for --kind.",
)
@click.option("--out", "out_dir", type=click.Path(file_okay=False), default=None)
@click.option("--simulate", is_flag=True, help="Also run the exact simulator when nbar is small enough.")
@click.option("--area-factor", type=float, default=1.0, show_default=True)
@click.option("--power-factor", type=float, default=1.0, show_default=True)
def experiment(kind, config_path, out_dir, simulate, area_factor, power_factor) -> None:
    """NOT-gate budget: duration, photon number, entanglement and spontaneous emission."""

    if area_factor <= 0:
        raise click.BadParameter("must be positive", param_hint="--area-factor")
    if power_factor <= 0:
        raise click.BadParameter("must be positive", param_hint="--power-factor")

    out_dir = out_dir or Config.OUTPUT_DIR
    config_path = config_path or os.path.join(Config.CONFIG_DIR, BUNDLED_CONFIGS[kind])
    parameters = {
        "kind": kind,
        "config": config_path,
        "simulate": simulate,
        "area_factor": area_factor,
        "power_factor": power_factor,
    }

    with _run(f"experiment_{kind}", out_dir, parameters) as (manifest, monitor):
        cfg = scaled_config(load_experiment_config(config_path, kind), area_factor, power_factor)
        report = experiment_report(kind, cfg, simulate=simulate, monitor=monitor)
        manifest.outputs.append(write_json(os.path.join(out_dir, f"experiment_{kind}.json"), report_as_dict(report)))

    click.echo(
        f"{kind}: T={report.T_not:.4g} s, nbar={report.nbar:.4g}, "
        f"E={report.entanglement_E:.3g} bits, p_spon={report.p_spon:.3g}"
    )
    for message in report.warnings:
        click.echo(f"warning: {message}", err=True)


@cli.command("scaling")
@click.option("--m", "m", type=click.IntRange(1, 2), required=True, help="Photons per qubit flip.")
@click.option("--nbar-min", type=float, default=1e3, show_default=True)
@click.option("--nbar-max", type=float, default=1e12, show_default=True)
@click.option("--points", type=click.IntRange(min=2), default=46, show_default=True)
@click.option("--out", "out_dir", type=click.Path(file_okay=False), default=None)
def scaling(m, nbar_min, nbar_max, points, out_dir) -> None:
    """Entanglement left by a NOT gate as a function of photon number."""

    if nbar_min < 100:
        raise click.BadParameter("must be at least 100", param_hint="--nbar-min")
    if nbar_max <= nbar_min:
        raise click.BadParameter("must exceed --nbar-min", param_hint="--nbar-max")

    out_dir = out_dir or Config.OUTPUT_DIR
    parameters = {"m": m, "nbar_min": nbar_min, "nbar_max": nbar_max, "points": points}
    with _run(f"scaling_m{m}", out_dir, parameters) as (manifest, _monitor):
        path = os.path.join(out_dir, f"scaling_m{m}.csv")
        manifest.outputs.append(write_csv(path, SCALING_COLUMNS, scaling_rows(m, nbar_min, nbar_max, points)))
    click.echo(f"scaling: {points} points written to {path}")


if __name__ == "__main__":
    cli()

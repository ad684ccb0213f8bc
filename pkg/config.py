import math
import os


def _get_bool_env(var_name: str, default: bool = False) -> bool:
    """Return a boolean from environment variables.

    Accepts common truthy strings (1/true/yes/on) case-insensitively.
    """
    value = os.environ.get(var_name)
    if value is None:
        return default

    return value.strip().lower() in {"1", "true", "yes", "y", "on"}


def _get_float_env(var_name: str, default: float) -> float:
    value = os.environ.get(var_name)
    if value is None or not value.strip():
        return default

    try:
        return float(value)
    except ValueError as exc:
        raise RuntimeError(f"{var_name} must be a number, got {value!r}.") from exc


def _get_int_env(var_name: str, default: int) -> int:
    value = os.environ.get(var_name)
    if value is None or not value.strip():
        return default

    try:
        return int(value)
    except ValueError as exc:
        raise RuntimeError(f"{var_name} must be an integer, got {value!r}.") from exc


BASE_DIR = os.path.abspath(os.path.dirname(__file__))
VERSION = "0.3.0"


class Config:
    TAIL_EPS = _get_float_env("QCE_TAIL_EPS", 1e-12)
    if not 0.0 < TAIL_EPS < 1.0:
        raise RuntimeError("QCE_TAIL_EPS must lie strictly between 0 and 1.")

    # Bloch-sphere quadrature: Gauss-Legendre in cos(theta), trapezoid in phi.
    N_THETA = _get_int_env("QCE_N_THETA", 24)
    N_PHI = _get_int_env("QCE_N_PHI", 16)
    if N_THETA < 2 or N_PHI < 1:
        raise RuntimeError("QCE_N_THETA must be >= 2 and QCE_N_PHI >= 1.")

    TAU_MAX = _get_float_env("QCE_TAU_MAX", math.pi)
    FIG1_POINTS = _get_int_env("QCE_FIG1_POINTS", 121)
    ANALYTIC_POINTS = _get_int_env("QCE_ANALYTIC_POINTS", 200)

    OUTPUT_DIR = os.environ.get("QCE_OUTPUT_DIR") or os.path.join(os.getcwd(), "out")
    CONFIG_DIR = os.path.join(BASE_DIR, "configs")

    # Above these photon numbers reports stay analytic-only.
    SIMULATE_MAX_NBAR_JC = _get_float_env("QCE_SIMULATE_MAX_NBAR_JC", 2.0**14)
    SIMULATE_MAX_NBAR_RAMAN = _get_float_env("QCE_SIMULATE_MAX_NBAR_RAMAN", 2.0**9)

    LOG_JSON = _get_bool_env("QCE_LOG_JSON", default=False)

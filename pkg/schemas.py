"""Pydantic models for experiment configs.

Bundled JSON configs use human units (um^2, mW, nm, GHz, MHz, kHz). They are
validated as ``*File`` models and converted to the strict-SI ``*Config``
models consumed by ``physics.experiments``.
"""

from __future__ import annotations

import json
import math
from typing import Any, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from physics.core.constants import CONSTANTS

KIND_QUADRUPOLE = "quadrupole"
KIND_DIPOLE = "dipole"
KIND_RAMAN = "raman"
KINDS = (KIND_QUADRUPOLE, KIND_DIPOLE, KIND_RAMAN)

# Laser linewidth assumed when a config gives none.
DEFAULT_BANDWIDTH_B = 2.0 * math.pi * 1e4

_UM2 = 1e-12
_MW = 1e-3
_NM = 1e-9
_TWO_PI = 2.0 * math.pi


class _Frozen(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)


class QuadrupoleConfig(_Frozen):
    area_A: float = Field(gt=0, description="focal area, m^2")
    power_P: float = Field(gt=0, description="laser power, W")
    wavelength: float = Field(gt=0, description="m")
    quadrupole_Q: float = Field(gt=0, description="C m^2")
    lifetime_tau0: float = Field(gt=0, description="upper-level lifetime, s")
    bandwidth_B: float = Field(DEFAULT_BANDWIDTH_B, ge=0, description="laser bandwidth, rad/s")


class DipoleConfig(_Frozen):
    area_A: float = Field(gt=0)
    power_P: float = Field(gt=0)
    wavelength: float = Field(gt=0)
    dipole_d: float = Field(gt=0, description="C m")
    lifetime_tau0: float = Field(gt=0)
    bandwidth_B: float = Field(DEFAULT_BANDWIDTH_B, ge=0)


class RamanConfig(_Frozen):
    area_A: float = Field(gt=0)
    power_P: float = Field(gt=0, description="power per beam, W")
    wavelength: float = Field(gt=0)
    dipole_d: float = Field(gt=0)
    detuning_delta: float = Field(gt=0, description="rad/s")
    gamma_excited: float = Field(gt=0, description="excited-state decay rate, rad/s")
    bandwidth_B: float = Field(DEFAULT_BANDWIDTH_B, ge=0)


ExperimentConfig = Union[QuadrupoleConfig, DipoleConfig, RamanConfig]


class _BeamFile(_Frozen):
    description: str | None = None
    area_um2: float = Field(gt=0)
    power_mW: float = Field(gt=0)
    wavelength_nm: float = Field(gt=0)
    bandwidth_kHz: float | None = Field(None, ge=0)

    def _beam_fields(self) -> dict[str, float]:
        fields = {
            "area_A": self.area_um2 * _UM2,
            "power_P": self.power_mW * _MW,
            "wavelength": self.wavelength_nm * _NM,
        }
        if self.bandwidth_kHz is not None:
            fields["bandwidth_B"] = _TWO_PI * self.bandwidth_kHz * 1e3
        return fields


class QuadrupoleFile(_BeamFile):
    quadrupole_e_a0_sq: float = Field(gt=0)
    lifetime_s: float = Field(gt=0)

    def to_config(self) -> QuadrupoleConfig:
        return QuadrupoleConfig(
            quadrupole_Q=self.quadrupole_e_a0_sq * CONSTANTS.e_a0_sq,
            lifetime_tau0=self.lifetime_s,
            **self._beam_fields(),
        )


class DipoleFile(_BeamFile):
    dipole_e_a0: float = Field(gt=0)
    lifetime_s: float = Field(gt=0)

    def to_config(self) -> DipoleConfig:
        return DipoleConfig(
            dipole_d=self.dipole_e_a0 * CONSTANTS.e_a0,
            lifetime_tau0=self.lifetime_s,
            **self._beam_fields(),
        )


class RamanFile(_BeamFile):
    dipole_e_a0: float = Field(gt=0)
    detuning_GHz: float = Field(gt=0)
    gamma_MHz: float = Field(gt=0)

    def to_config(self) -> RamanConfig:
        return RamanConfig(
            dipole_d=self.dipole_e_a0 * CONSTANTS.e_a0,
            detuning_delta=_TWO_PI * self.detuning_GHz * 1e9,
            gamma_excited=_TWO_PI * self.gamma_MHz * 1e6,
            **self._beam_fields(),
        )


FILE_MODELS: dict[str, type[_BeamFile]] = {
    KIND_QUADRUPOLE: QuadrupoleFile,
    KIND_DIPOLE: DipoleFile,
    KIND_RAMAN: RamanFile,
}

# Human-unit key -> SI field it feeds.
SI_FIELD_NAMES = {
    "area_um2": "area_A",
    "power_mW": "power_P",
    "wavelength_nm": "wavelength",
    "bandwidth_kHz": "bandwidth_B",
    "quadrupole_e_a0_sq": "quadrupole_Q",
    "dipole_e_a0": "dipole_d",
    "lifetime_s": "lifetime_tau0",
    "detuning_GHz": "detuning_delta",
    "gamma_MHz": "gamma_excited",
}


class ConfigError(ValueError):
    """An experiment config failed to load; ``errors`` lists (field path, message)."""

    def __init__(self, source: str, errors: list[tuple[str, str]]):
        self.source = source
        self.errors = errors
        details = "; ".join(f"{path}: {message}" for path, message in errors)
        super().__init__(f"invalid experiment config {source}: {details}")


def _field_path(loc: tuple[Any, ...]) -> str:
    parts = [str(part) for part in loc]
    if parts and parts[-1] in SI_FIELD_NAMES:
        parts[-1] = f"{SI_FIELD_NAMES[parts[-1]]} ({parts[-1]})"
    return ".".join(parts) or "<root>"


def parse_experiment_config(data: dict[str, Any], kind: str, source: str = "<data>") -> ExperimentConfig:
    try:
        file_model = FILE_MODELS[kind]
    except KeyError:
        raise ConfigError(source, [("kind", f"expected one of {list(KINDS)}, got {kind!r}")]) from None

    try:
        return file_model.model_validate(data).to_config()
    except ValidationError as exc:
        errors = [(_field_path(tuple(err["loc"])), err["msg"]) for err in exc.errors()]
        raise ConfigError(source, errors) from exc


def load_experiment_config(path: str, kind: str) -> ExperimentConfig:
    try:
        with open(path, encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as exc:
        raise ConfigError(path, [("<file>", str(exc))]) from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(path, [("<json>", f"line {exc.lineno}: {exc.msg}")]) from exc

    if not isinstance(data, dict):
        raise ConfigError(path, [("<root>", "expected a JSON object")])

    return parse_experiment_config(data, kind, source=path)

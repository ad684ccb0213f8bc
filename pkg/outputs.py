"""CSV series files and the JSON run manifest written next to them."""

from __future__ import annotations

import csv
import dataclasses
import json
import logging
import math
import os
from datetime import datetime, timezone
from typing import Any, Iterable, Sequence

from config import VERSION

logger = logging.getLogger(__name__)

FIGURE_COLUMNS = ("series", "kind", "nbar", "tau", "entanglement")
SCALING_COLUMNS = ("m", "nbar", "full", "leading", "ratio")


def format_value(value: Any) -> str:
    if isinstance(value, bool) or value is None:
        return "" if value is None else str(value).lower()
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format(value, ".9g")
    return str(value)


def write_csv(path: str, columns: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    """Header plus one formatted row per record; line endings fixed to LF."""

    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    count = 0
    with open(path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([format_value(value) for value in row])
            count += 1

    logger.info("Wrote %d rows to %s", count, path)
    return path


def read_csv(path: str) -> list[dict[str, str]]:
    with open(path, newline="", encoding="utf-8") as handle:
        return list(csv.DictReader(handle))


@dataclasses.dataclass
class RunManifest:
    command: str
    parameters: dict[str, Any]
    outputs: list[str] = dataclasses.field(default_factory=list)
    version: str = VERSION
    duration_s: float = 0.0
    run_id: str | None = None
    leakage: dict[str, Any] | None = None
    created_at: str = dataclasses.field(
        default_factory=lambda: datetime.now(timezone.utc).isoformat().replace("+00:00", "Z")
    )

    def as_dict(self) -> dict[str, Any]:
        return dataclasses.asdict(self)

    def write(self, out_dir: str) -> str:
        path = os.path.join(out_dir, f"{self.command}.manifest.json")
        os.makedirs(out_dir, exist_ok=True)
        with open(path, "w", encoding="utf-8") as handle:
            json.dump(self.as_dict(), handle, indent=2, sort_keys=True, default=str)
            handle.write("\n")
        return path


def report_as_dict(report) -> dict[str, Any]:
    """GateReport in SI units plus a block of human-readable values."""

    data = dataclasses.asdict(report)
    data["validity_ratios"] = list(report.validity_ratios)
    data["warnings"] = list(report.warnings)
    data["notes"] = list(report.notes)
    data["human"] = {
        "T_not_us": report.T_not * 1e6,
        "nbar": f"{report.nbar:.3e}",
        "E_bits": f"{report.entanglement_E:.3e}",
        "p_spon": f"{report.p_spon:.3e}",
        "laser_frequency_THz": report.omega_L / (2e12 * math.pi),
    }
    return data


def write_json(path: str, data: dict[str, Any]) -> str:
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(data, handle, indent=2, sort_keys=True)
        handle.write("\n")
    logger.info("Wrote %s", path)
    return path

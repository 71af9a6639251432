"""Trajectory log schema and file I/O (CSV trajectories, JSON metrics).

Every run, 3D or planar, logs the same row schema so downstream tooling can
treat all trajectories uniformly; a planar run simply leaves the columns it
has no use for at zero.  Angles are radians, distances metres, accelerations
m/s^2.  Floats are written with 17 significant digits so a written-and-reread
trajectory is bit-identical.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass, field
from typing import Iterable

# Column order of the trajectory CSV.  Vz/Vy are the quadratic error forms
# of the vertical and horizontal guidance channels; x/y/z the inertial
# interceptor position.
COLUMNS = (
    "t",
    "r",
    "theta",
    "psi",
    "thetaM",
    "psiM",
    "sigma",
    "aMy",
    "aMz",
    "by",
    "bz",
    "z1",
    "z2",
    "z3",
    "z4",
    "zy",
    "zz",
    "aYMax",
    "aZMax",
    "Vz",
    "Vy",
    "x",
    "y",
    "z",
)


@dataclass
class LogRow:
    """One sampled instant of a run, in the shared column schema."""

    t: float
    r: float
    theta: float
    psi: float
    theta_m: float
    psi_m: float
    sigma: float
    a_my: float
    a_mz: float
    b_y: float
    b_z: float
    z1: float
    z2: float
    z3: float
    z4: float
    zy: float
    zz: float
    a_y_max: float
    a_z_max: float
    lyapunov_z: float
    lyapunov_y: float
    x: float
    y: float
    z: float

    def values(self) -> tuple[float, ...]:
        return (
            self.t,
            self.r,
            self.theta,
            self.psi,
            self.theta_m,
            self.psi_m,
            self.sigma,
            self.a_my,
            self.a_mz,
            self.b_y,
            self.b_z,
            self.z1,
            self.z2,
            self.z3,
            self.z4,
            self.zy,
            self.zz,
            self.a_y_max,
            self.a_z_max,
            self.lyapunov_z,
            self.lyapunov_y,
            self.x,
            self.y,
            self.z,
        )


@dataclass
class TrajectoryLog:
    """Sampled trajectory of one run plus any warnings it raised."""

    rows: list[LogRow] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)
    meta: dict[str, object] = field(default_factory=dict)

    def column(self, name: str) -> list[float]:
        """One column as a list, by CSV header name."""
        idx = COLUMNS.index(name)
        return [row.values()[idx] for row in self.rows]


# --- CSV ----------------------------------------------------------------------


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def write_trajectory_csv(log: TrajectoryLog, path: str) -> None:
    """Write the trajectory rows in the shared column schema."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(COLUMNS)
        for row in log.rows:
            writer.writerow([_fmt(v) for v in row.values()])


def read_trajectory_csv(path: str) -> TrajectoryLog:
    """Read a trajectory CSV written by :func:`write_trajectory_csv`."""
    log = TrajectoryLog()
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        if tuple(header) != COLUMNS:
            raise ValueError(f"unexpected trajectory columns: {header}")
        for rec in reader:
            log.rows.append(LogRow(*(float(v) for v in rec)))
    return log


def write_report_csv(path: str, header: Iterable[str], rows: Iterable[Iterable[object]]) -> None:
    """Write a small summary table (batch reports)."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(list(header))
        for row in rows:
            writer.writerow([_fmt(v) if isinstance(v, float) else v for v in row])


# --- JSON ---------------------------------------------------------------------


def write_metrics_json(metrics: dict[str, object], path: str) -> None:
    """Write a metrics mapping as pretty JSON; non-finite floats become null."""

    def clean(obj: object) -> object:
        if isinstance(obj, float) and not math.isfinite(obj):
            return None
        if isinstance(obj, dict):
            return {k: clean(v) for k, v in obj.items()}
        if isinstance(obj, (list, tuple)):
            return [clean(v) for v in obj]
        return obj

    with open(path, "w") as fh:
        json.dump(clean(metrics), fh, indent=2, sort_keys=True)
        fh.write("\n")

"""Fixed-step RK4 integration of an engagement under a guidance law.

The engine is law-agnostic: anything with a ``state_size``, a ``t_final``
attribute, an ``evaluate(t, y) -> eval`` returning state derivatives in
``eval.derivs``, and a ``log_row(t, y, eval)`` can be integrated.  Guidance
commands are re-evaluated at every Runge-Kutta stage, so the closed loop is
integrated as one smooth vector field rather than with a held command.

A run terminates when the range first drops to the hit radius
(``intercepted``, with the crossing time interpolated inside the final
step), when the range starts growing again after a closest approach inside
ten hit radii (a near-miss flyby, reported as ``timeout`` with the miss
distance at closest approach), when simulated time exceeds
``t_max_factor`` times the commanded impact time (``timeout``), or when a
numerical guard fires (``guard-tripped``).
"""

from __future__ import annotations

import math
import warnings as _warnings
from dataclasses import dataclass
from enum import Enum
from typing import Protocol

from .errors import ConfigError, GuardTrip, InfeasibleScenarioWarning, InfeasibleShapingWarning
from .logio import LogRow, TrajectoryLog


class GuidanceLaw(Protocol):
    state_size: int
    speed: float
    t_final: float

    def evaluate(self, t: float, y: tuple[float, ...]) -> object: ...

    def log_row(self, t: float, y: tuple[float, ...], ev: object) -> LogRow: ...


@dataclass(frozen=True)
class SimSettings:
    """Integration and logging controls.

    dt            fixed integration step, s
    hit_radius    range at which the target counts as intercepted, m
    t_max_factor  stop (timeout) at t_max_factor * t_final
    log_stride    log every Nth step (first and last steps always logged)
    """

    dt: float = 1e-3
    hit_radius: float = 1.0
    t_max_factor: float = 1.5
    log_stride: int = 10

    def validate(self) -> None:
        if self.dt <= 0.0:
            raise ConfigError(f"integration step dt must be > 0, got {self.dt}")
        if self.hit_radius <= 0.0:
            raise ConfigError(f"hit radius must be > 0, got {self.hit_radius}")
        if self.t_max_factor <= 1.0:
            raise ConfigError(f"t_max_factor must be > 1, got {self.t_max_factor}")
        if self.log_stride < 1:
            raise ConfigError(f"log stride must be >= 1, got {self.log_stride}")


class RunStatus(str, Enum):
    INTERCEPTED = "intercepted"
    TIMEOUT = "timeout"
    GUARD_TRIPPED = "guard-tripped"


@dataclass
class RunOutcome:
    """Terminal result of one simulated engagement.

    impact_time is the interpolated instant the range crossed the hit
    radius (None unless intercepted); miss_distance is the smallest range
    reached over the whole run.
    """

    status: RunStatus
    impact_time: float | None
    miss_distance: float
    final_time: float
    guard: str | None = None
    message: str = ""


def rk4_step(
    law: GuidanceLaw, t: float, y: tuple[float, ...], dt: float
) -> tuple[tuple[float, ...], object]:
    """One classical RK4 step; returns the new state and the stage-1 eval."""
    ev1 = law.evaluate(t, y)
    k1 = ev1.derivs
    h2 = 0.5 * dt
    y2 = tuple(yi + h2 * ki for yi, ki in zip(y, k1))
    k2 = law.evaluate(t + h2, y2).derivs
    y3 = tuple(yi + h2 * ki for yi, ki in zip(y, k2))
    k3 = law.evaluate(t + h2, y3).derivs
    y4 = tuple(yi + dt * ki for yi, ki in zip(y, k3))
    k4 = law.evaluate(t + dt, y4).derivs
    h6 = dt / 6.0
    y_new = tuple(
        yi + h6 * (a + 2.0 * b + 2.0 * c + d) for yi, a, b, c, d in zip(y, k1, k2, k3, k4)
    )
    return y_new, ev1


def simulate(
    law: GuidanceLaw, y0: tuple[float, ...], settings: SimSettings = SimSettings()
) -> tuple[TrajectoryLog, RunOutcome]:
    """Integrate one engagement to termination.

    The state convention is fixed only in its first component: y[0] must be
    the range to target, which drives the interception and flyby logic.
    """
    settings.validate()
    if len(y0) != law.state_size:
        raise ConfigError(f"initial state has {len(y0)} components, law expects {law.state_size}")

    log = TrajectoryLog(meta={"law": type(law).__name__, "dt": settings.dt})
    dt = settings.dt
    t_max = settings.t_max_factor * law.t_final
    y = tuple(float(v) for v in y0)

    # Up-front feasibility: flying dead straight must reach the target no
    # later than the commanded impact time, or the timing demand is already
    # unmeetable.
    if y[0] > law.speed * law.t_final:
        msg = (
            f"range {y[0]:.1f} m exceeds speed*t_final = {law.speed * law.t_final:.1f} m; "
            "impact-time target unreachable"
        )
        _warnings.warn(msg, InfeasibleScenarioWarning, stacklevel=2)
        log.warnings.append(msg)

    r_min = y[0]
    t_r_min = 0.0
    step = 0
    last_logged = -1
    was_feasible = True
    warned_infeasible = False

    def log_state(t: float, ev: object) -> None:
        nonlocal last_logged
        log.rows.append(law.log_row(t, y, ev))
        last_logged = step

    while True:
        t = step * dt
        try:
            y_new, ev = rk4_step(law, t, y, dt)
        except GuardTrip as trip:
            # Try to capture the last healthy state in the log before
            # reporting the trip; the pre-step state evaluated fine on the
            # previous iteration, so a second failure here means the trip
            # is at the step boundary itself and the log just ends early.
            try:
                if last_logged != step:
                    log_state(t, law.evaluate(t, y))
            except GuardTrip:
                pass
            return log, RunOutcome(
                status=RunStatus.GUARD_TRIPPED,
                impact_time=None,
                miss_distance=r_min,
                final_time=t,
                guard=trip.guard,
                message=str(trip),
            )

        if getattr(ev, "feasible", True) != was_feasible:
            was_feasible = getattr(ev, "feasible", True)
            # Report the first clamp only; a run hovering at the feasibility
            # boundary would otherwise flood the warning list, and the logged
            # z1 column already carries the step-by-step detail.
            if not was_feasible and not warned_infeasible:
                warned_infeasible = True
                msg = f"shaping demand clamped to zero lead at t={t:.3f} s (range-time error < 0)"
                _warnings.warn(msg, InfeasibleShapingWarning, stacklevel=2)
                log.warnings.append(msg)

        if step % settings.log_stride == 0:
            log_state(t, ev)

        if not all(math.isfinite(v) for v in y_new):
            return log, RunOutcome(
                status=RunStatus.GUARD_TRIPPED,
                impact_time=None,
                miss_distance=r_min,
                final_time=t,
                guard="nonfinite-state",
                message=f"non-finite state component after step at t={t:.6f} s",
            )

        step += 1
        t_new = step * dt
        r_prev, r_new = y[0], y_new[0]
        y = y_new
        if r_new < r_min:
            r_min = r_new
            t_r_min = t_new

        if r_new <= settings.hit_radius:
            # Linear-in-range interpolation of the crossing instant.
            frac = (r_prev - settings.hit_radius) / (r_prev - r_new)
            impact = t_new - dt + frac * dt
            try:
                log_state(t_new, law.evaluate(t_new, y))
            except GuardTrip:
                pass
            return log, RunOutcome(
                status=RunStatus.INTERCEPTED,
                impact_time=impact,
                miss_distance=r_new,
                final_time=t_new,
                message=f"range crossed {settings.hit_radius} m at t={impact:.4f} s",
            )

        flyby = r_new > r_prev and r_min < 10.0 * settings.hit_radius
        if flyby or t_new >= t_max:
            try:
                if last_logged != step:
                    log_state(t_new, law.evaluate(t_new, y))
            except GuardTrip:
                pass
            if flyby:
                msg = (
                    f"flyby: range increasing at t={t_new:.4f} s after closest "
                    f"approach {r_min:.3f} m at t={t_r_min:.4f} s"
                )
            else:
                msg = (
                    f"no interception by t={t_new:.2f} s; closest approach "
                    f"{r_min:.2f} m at t={t_r_min:.2f} s"
                )
            return log, RunOutcome(
                status=RunStatus.TIMEOUT,
                impact_time=None,
                miss_distance=r_min,
                final_time=t_new,
                message=msg,
            )

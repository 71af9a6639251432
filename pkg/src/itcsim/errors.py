"""Shared exception and warning types for the simulation package."""

from __future__ import annotations


class ConfigError(ValueError):
    """Raised when a scenario configuration is malformed or out of range."""


class ParseError(ConfigError):
    """Raised when a config file cannot be parsed at all."""


class ValidationError(ConfigError):
    """Raised when a parsed config value violates a model constraint."""


class GuardTrip(RuntimeError):
    """Raised inside the integration loop when a numerical guard fires.

    The run loop catches this and reports the run as guard-tripped rather
    than letting a division blow up or NaNs propagate into the log.
    """

    def __init__(self, guard: str, t: float, detail: str = "") -> None:
        self.guard = guard
        self.t = t
        self.detail = detail
        msg = f"guard '{guard}' tripped at t={t:.6f} s"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class SimulationWarning(UserWarning):
    """Base class for non-fatal conditions detected during a run."""


class InfeasibleShapingWarning(SimulationWarning):
    """The range-to-go exceeds what the remaining flight time can cover.

    The lead-shaping block clamps the desired lead angle to zero in this
    regime; the run continues but the impact-time target may be missed.
    """


class InfeasibleScenarioWarning(SimulationWarning):
    """The scenario as configured cannot meet its impact-time target.

    Emitted before integration starts (for example when the straight-line
    flight time to the target already exceeds the commanded impact time).
    The run still executes so the user can inspect the trajectory.
    """

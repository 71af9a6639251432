"""Impact-time backstepping guidance in the plane, plus an uncompensated baseline.

The planar law is the two-dimensional restriction of the 3D chain: one LOS
angle, one lead angle ``sigma`` and one lateral-acceleration channel.  The
shaped lead demand is tracked through the error pair

    z2 = sigma - sigma_d,    zy = a_my - alpha_y

which under exact cancellation obeys

    z2_dot = -k2*z2 + zy/v,    zy_dot = -ky*zy - z2/v.

``BaselinePlanar`` is the comparison law: the same shaping and lead-error
feedback, but the stabilizing acceleration is applied directly as if the
actuator were ideal, with at most a hard clip at the acceleration bound.  It
has no actuator state and no knowledge of the saturation dynamics, which is
exactly what makes it a fair efficiency benchmark for the compensated law.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import GuardTrip
from .kinematics import EPS_RANGE, lead_rate_planar, los_rates_planar
from .logio import LogRow
from .saturation import SaturationParams, axis_brackets, clip_command
from .shaping import ShapingParams, shaping_rates

EPS_DEN = 1e-6


def _planar_log_row(
    t: float,
    r: float,
    theta: float,
    sigma: float,
    a_my: float,
    ev: "EvalPlanar",
    target: tuple[float, float, float],
) -> LogRow:
    """Planar run in the shared schema: 3D-only columns stay zero.

    The planar LOS angle goes in the ``theta`` column (matching the planar
    state naming) and the engagement plane is taken as z = target z for the
    position columns.
    """
    return LogRow(
        t=t,
        r=r,
        theta=theta,
        psi=0.0,
        theta_m=0.0,
        psi_m=0.0,
        sigma=sigma,
        a_my=a_my,
        a_mz=0.0,
        b_y=ev.b_y,
        b_z=0.0,
        z1=ev.z1,
        z2=ev.z2,
        z3=0.0,
        z4=0.0,
        zy=ev.zy,
        zz=0.0,
        a_y_max=ev.a_y_max,
        a_z_max=0.0,
        lyapunov_z=0.0,
        lyapunov_y=ev.lyapunov_y,
        x=target[0] - r * math.cos(theta),
        y=target[1] - r * math.sin(theta),
        z=target[2],
    )


@dataclass
class EvalPlanar:
    """One evaluation of a planar law: derivatives plus diagnostics.

    ``derivs`` covers (r, theta, sigma, a_my) for the compensated law and
    (r, theta, sigma) for the baseline, whose acceleration is not a state.
    """

    derivs: tuple[float, ...]
    sigma_d: float
    z1: float
    z2: float
    zy: float
    alpha_y: float
    alpha_y_dot: float
    b_y: float
    a_y_max: float
    lyapunov_y: float
    feasible: bool
    capped: bool


class GuidancePlanar:
    """Closed-loop evaluation of the planar impact-time guidance law."""

    state_size = 4

    def __init__(
        self,
        speed: float,
        t_final: float,
        shaping: ShapingParams,
        sat: SaturationParams,
        k2: float = 1.0,
        ky: float = 7.0,
        target: tuple[float, float, float] = (0.0, 0.0, 0.0),
    ) -> None:
        self.speed = speed
        self.t_final = t_final
        self.shaping = shaping
        self.sat = sat
        self.k2 = k2
        self.ky = ky
        self.target = target

    def evaluate(self, t: float, y: tuple[float, float, float, float]) -> EvalPlanar:
        r, _theta, sigma, a_my = y
        v = self.speed
        if r < EPS_RANGE:
            raise GuardTrip("range-floor", t, f"r={r:.3e} m")

        sin_s = math.sin(sigma)
        cos_s = math.cos(sigma)
        r_dot, theta_dot = los_rates_planar(r, sigma, v)
        sigma_dot = lead_rate_planar(theta_dot, a_my, v)

        # --- Range-time error and shaped demand ---
        z1 = v * (self.t_final - t) - r
        z1_dot = -v - r_dot
        z1_ddot = -v * sin_s * sigma_dot
        sh = shaping_rates(z1, z1_dot, z1_ddot, self.shaping)

        # --- Lead error and stabilizing acceleration ---
        z2 = sigma - sh.sigma_d
        alpha_y = v * (sh.sigma_d_dot - v * sin_s / r - self.k2 * z2)
        zy = a_my - alpha_y
        z2_dot = sigma_dot - sh.sigma_d_dot
        alpha_y_dot = v * (
            sh.sigma_d_ddot
            - v * cos_s * sigma_dot / r
            + v * sin_s * r_dot / (r * r)
            - self.k2 * z2_dot
        )

        # --- Commanded input through the saturation bracket ---
        sat = self.sat
        bracket, _, a_y_max, _ = axis_brackets(a_my, 0.0, sat)
        if bracket < EPS_DEN:
            raise GuardTrip("denominator-singular", t, f"bracket={bracket:.3e}")
        raw_b = (sat.rho * a_my + alpha_y_dot - z2 / v - self.ky * zy) / bracket
        b_y = clip_command(raw_b, sat)
        a_my_dot = bracket * b_y - sat.rho * a_my

        return EvalPlanar(
            derivs=(r_dot, theta_dot, sigma_dot, a_my_dot),
            sigma_d=sh.sigma_d,
            z1=z1,
            z2=z2,
            zy=zy,
            alpha_y=alpha_y,
            alpha_y_dot=alpha_y_dot,
            b_y=b_y,
            a_y_max=a_y_max,
            lyapunov_y=0.5 * (z2 * z2 + zy * zy),
            feasible=sh.feasible,
            capped=b_y != raw_b,
        )

    def log_row(
        self, t: float, y: tuple[float, float, float, float], ev: EvalPlanar
    ) -> LogRow:
        r, theta, sigma, a_my = y
        return _planar_log_row(t, r, theta, sigma, a_my, ev, self.target)


class BaselinePlanar:
    """Planar backstepping with an ideal actuator and optional hard clip.

    The lead demand and z2 feedback match ``GuidancePlanar``; the stabilizing
    acceleration is simply applied (clipped to ``a_clip`` when one is given),
    so the lateral acceleration is an output, not a state.
    """

    state_size = 3

    def __init__(
        self,
        speed: float,
        t_final: float,
        shaping: ShapingParams,
        k2: float = 1.0,
        a_clip: float = math.inf,
        target: tuple[float, float, float] = (0.0, 0.0, 0.0),
    ) -> None:
        self.speed = speed
        self.t_final = t_final
        self.shaping = shaping
        self.k2 = k2
        self.a_clip = a_clip
        self.target = target

    def evaluate(self, t: float, y: tuple[float, float, float]) -> EvalPlanar:
        r, _theta, sigma = y
        v = self.speed
        if r < EPS_RANGE:
            raise GuardTrip("range-floor", t, f"r={r:.3e} m")

        r_dot, theta_dot = los_rates_planar(r, sigma, v)
        z1 = v * (self.t_final - t) - r
        z1_dot = -v - r_dot
        # The demand rates only need z1 and z1_dot here; the second-derivative
        # slot feeds sigma_d_ddot, which this law never uses.
        sh = shaping_rates(z1, z1_dot, 0.0, self.shaping)
        z2 = sigma - sh.sigma_d
        a_raw = v * (sh.sigma_d_dot - v * math.sin(sigma) / r - self.k2 * z2)
        a_my = max(-self.a_clip, min(self.a_clip, a_raw))
        sigma_dot = lead_rate_planar(theta_dot, a_my, v)

        return EvalPlanar(
            derivs=(r_dot, theta_dot, sigma_dot),
            sigma_d=sh.sigma_d,
            z1=z1,
            z2=z2,
            zy=0.0,
            alpha_y=a_raw,
            alpha_y_dot=0.0,
            b_y=a_raw,
            a_y_max=self.a_clip,
            lyapunov_y=0.5 * z2 * z2,
            feasible=sh.feasible,
            capped=a_my != a_raw,
        )

    def log_row(self, t: float, y: tuple[float, float, float], ev: EvalPlanar) -> LogRow:
        r, theta, sigma = y
        a_my = max(-self.a_clip, min(self.a_clip, ev.alpha_y))
        return _planar_log_row(t, r, theta, sigma, a_my, ev, self.target)

"""Engagement kinematics for a constant-speed interceptor against a fixed target.

The interceptor is modelled as a point mass flying at constant speed ``v``.
Geometry is expressed in a line-of-sight (LOS) frame centred on the
interceptor: ``r`` is the range to the target, ``theta``/``psi`` are the LOS
elevation/azimuth angles, and ``theta_m``/``psi_m`` are the velocity-vector
(heading) angles measured *relative to the LOS*, so they double as the
vertical and horizontal lead components.  Lateral accelerations ``a_my``
(horizontal) and ``a_mz`` (vertical) rotate the velocity vector; speed never
changes.

The planar variant is the restriction of the same equations to the
horizontal plane (``theta = theta_m = 0``): a single LOS angle, a single
lead angle ``sigma`` and a single lateral acceleration.

Angles are radians, distances metres, times seconds throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

# Guard thresholds for near-singular geometry.  LOS elevation of +-90 deg
# (cos(theta) ~ 0) and zero range make the spherical equations singular;
# both are far outside any sensible engagement and are treated as errors
# by the integration loop rather than silently clamped.
EPS_COS = 1e-9
EPS_RANGE = 1e-6


@dataclass
class State3D:
    """Full three-dimensional engagement state at time ``t``.

    r        range to target, m
    theta    LOS elevation, rad
    psi      LOS azimuth, rad
    theta_m  vertical lead (velocity pitch relative to LOS), rad
    psi_m    horizontal lead (velocity yaw relative to LOS), rad
    a_my     achieved horizontal lateral acceleration, m/s^2
    a_mz     achieved vertical lateral acceleration, m/s^2
    t        time since launch, s
    """

    r: float
    theta: float
    psi: float
    theta_m: float
    psi_m: float
    a_my: float
    a_mz: float
    t: float


@dataclass
class PlanarState:
    """Planar engagement state at time ``t``.

    r      range to target, m
    theta  LOS angle in the engagement plane, rad
    sigma  lead angle (velocity relative to LOS), rad
    a_my   achieved lateral acceleration, m/s^2
    t      time since launch, s
    """

    r: float
    theta: float
    sigma: float
    a_my: float
    t: float


# --- Lead angle -------------------------------------------------------------


def effective_lead(theta_m: float, psi_m: float) -> float:
    """Total angle between velocity vector and LOS, rad.

    cos(sigma) = cos(theta_m) * cos(psi_m); the seeker field-of-view
    constraint applies to this combined angle, not to either component.
    """
    c = math.cos(theta_m) * math.cos(psi_m)
    # Guard the inverse cosine against rounding just outside [-1, 1].
    return math.acos(max(-1.0, min(1.0, c)))


# --- Equations of motion ----------------------------------------------------


def los_rates_3d(
    r: float, theta: float, theta_m: float, psi_m: float, v: float
) -> tuple[float, float, float]:
    """Range and LOS angular rates (r_dot, theta_dot, psi_dot) for 3D flight."""
    cos_tm = math.cos(theta_m)
    r_dot = -v * cos_tm * math.cos(psi_m)
    theta_dot = -v * math.sin(theta_m) / r
    psi_dot = -v * cos_tm * math.sin(psi_m) / (r * math.cos(theta))
    return r_dot, theta_dot, psi_dot


def heading_rates_3d(
    theta: float,
    theta_m: float,
    psi_m: float,
    theta_dot: float,
    psi_dot: float,
    a_my: float,
    a_mz: float,
    v: float,
) -> tuple[float, float]:
    """Lead-angle rates (theta_m_dot, psi_m_dot) under lateral accelerations.

    The lead angles are measured against the rotating LOS frame, so the LOS
    rates appear as kinematic coupling terms alongside the acceleration
    commands.
    """
    sin_t = math.sin(theta)
    cos_t = math.cos(theta)
    tan_tm = math.tan(theta_m)
    sin_pm = math.sin(psi_m)
    cos_pm = math.cos(psi_m)
    theta_m_dot = a_mz / v - psi_dot * sin_t * sin_pm - theta_dot * cos_pm
    psi_m_dot = (
        a_my / (v * math.cos(theta_m))
        + psi_dot * tan_tm * cos_pm * sin_t
        - psi_dot * cos_t
        - theta_dot * tan_tm * sin_pm
    )
    return theta_m_dot, psi_m_dot


def los_rates_planar(r: float, sigma: float, v: float) -> tuple[float, float]:
    """Range and LOS rates (r_dot, theta_dot) for planar flight."""
    return -v * math.cos(sigma), -v * math.sin(sigma) / r


def lead_rate_planar(theta_dot: float, a_my: float, v: float) -> float:
    """Planar lead-angle rate: turn rate of the velocity minus the LOS rate."""
    return a_my / v - theta_dot


# --- Inertial position ------------------------------------------------------


def inertial_position(
    r: float, theta: float, psi: float, target: tuple[float, float, float] = (0.0, 0.0, 0.0)
) -> tuple[float, float, float]:
    """Interceptor position in the inertial frame, m.

    The LOS unit vector from interceptor to target is
    (cos(theta)cos(psi), cos(theta)sin(psi), sin(theta)); the interceptor
    sits range ``r`` behind the target along it.  With the default target
    at the origin and zero initial LOS angles the interceptor starts on
    the negative x axis.
    """
    ct = math.cos(theta)
    return (
        target[0] - r * ct * math.cos(psi),
        target[1] - r * ct * math.sin(psi),
        target[2] - r * math.sin(theta),
    )

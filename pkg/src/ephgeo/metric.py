"""Invariant metric ds^2 = (du^2 - sigma dv^2) / v^2 and derived quantities:
first fundamental form, curve length, Euler-Lagrange residuals, and the
closed-form arc-length integral along principal parabolas.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.interpolate import CubicSpline

from .curves import PolyCurve, concatenate  # noqa: F401  (re-exported)
from .errors import (
    ImaginaryLength,
    InsufficientSamples,
    NotInUpperHalfPlane,
    PoleOnSegment,
)
from .hypercomplex import GeometryKind

QUAD_REL = 1e-9    # Simpson refinement stop, relative
QUAD_ABS = 1e-12


@dataclass(frozen=True)
class MetricForm:
    """Coefficients E du^2 + 2 F du dv + G dv^2."""

    E: float
    F: float
    G: float


def metric_at(p, kind: GeometryKind) -> MetricForm:
    u, v = float(p[0]), float(p[1])
    if v <= 0:
        raise NotInUpperHalfPlane(f"metric undefined at v = {v}")
    return MetricForm(1.0 / (v * v), 0.0, -kind.sigma / (v * v))


def _simpson(f: np.ndarray, h: float) -> float:
    return h / 3.0 * (f[0] + f[-1] + 4.0 * f[1:-1:2].sum() + 2.0 * f[2:-1:2].sum())


def curve_length(c: PolyCurve, timelike: bool = False) -> float:
    """Length of a sampled curve under the invariant metric.

    Samples are interpolated with a cubic spline (straight segments when
    fewer than 4 samples) and the integrand sqrt(u'^2 - sigma v'^2)/v is
    refined by interval doubling until successive Simpson estimates agree.
    The timelike flag (sigma = +1 only) integrates sqrt(v'^2 - u'^2)/v.
    """
    sigma = c.kind.sigma
    sign = 1.0
    if timelike:
        if c.kind is not GeometryKind.HYPERBOLIC:
            raise ValueError("timelike lengths exist only for sigma = +1")
        sign = -1.0

    if len(c) < 4:
        return _polyline_length(c, sigma, sign)

    su = CubicSpline(c.t, c.u)
    sv = CubicSpline(c.t, c.v)

    def integrand(ts: np.ndarray) -> np.ndarray:
        du = su(ts, 1)
        dv = sv(ts, 1)
        q = sign * (du * du - sigma * dv * dv)
        scale = np.max(np.abs(du * du) + np.abs(dv * dv)) + 1.0
        if np.any(q < -1e-10 * scale):
            raise ImaginaryLength("integrand negative; wrong causal character")
        return np.sqrt(np.maximum(q, 0.0)) / sv(ts)

    t0, t1 = float(c.t[0]), float(c.t[-1])
    n = 64
    prev = math.inf
    while True:
        ts = np.linspace(t0, t1, n + 1)
        est = _simpson(integrand(ts), (t1 - t0) / n)
        if abs(est - prev) <= QUAD_REL * abs(est) + QUAD_ABS:
            return float(est)
        if n >= 1 << 20:
            return float(est)
        prev = est
        n *= 2


def _polyline_length(c: PolyCurve, sigma: int, sign: float) -> float:
    # exact integral over straight segments; v is linear on each
    total = 0.0
    for i in range(len(c) - 1):
        du = c.u[i + 1] - c.u[i]
        dv = c.v[i + 1] - c.v[i]
        q = sign * (du * du - sigma * dv * dv)
        if q < -1e-10 * (du * du + dv * dv + 1.0):
            raise ImaginaryLength("integrand negative; wrong causal character")
        speed = math.sqrt(max(q, 0.0))
        if abs(dv) < 1e-15 * max(1.0, abs(c.v[i])):
            total += speed / c.v[i]
        else:
            total += speed * math.log(c.v[i + 1] / c.v[i]) / dv
    return total


def el_residual(c: PolyCurve, T: float) -> tuple[float, float]:
    """Euler-Lagrange residuals of the length functional at parameter T.

    First equation:  d/dT (u' / v^2) = 0.
    Second equation: d/dT (sigma v' / v^2) = (u'^2 - sigma v'^2) / v^3.
    Uses second-order central differences on the curve's own samples; the
    nearest sample to T needs two neighbors on each side.
    """
    if len(c) < 5:
        raise InsufficientSamples("need at least 5 samples")
    idx = int(np.argmin(np.abs(c.t - T)))
    if idx < 2 or idx > len(c) - 3:
        raise InsufficientSamples("need 2 samples on each side of T")
    sigma = c.kind.sigma
    du = np.gradient(c.u, c.t)
    dv = np.gradient(c.v, c.t)
    p1 = du / c.v**2
    p2 = sigma * dv / c.v**2
    r1 = np.gradient(p1, c.t)[idx]
    r2 = np.gradient(p2, c.t)[idx] - (du[idx] ** 2 - sigma * dv[idx] ** 2) / c.v[idx] ** 3
    return float(r1), float(r2)


def parabola_segment_length(a: float, b: float, c: float, t0: float, t1: float) -> float:
    """Closed form of the integral of dt / (a t^2 + b t + c) over [t0, t1].

    This is the invariant length element along curves parameterized so the
    metric weight is a quadratic in the parameter; the branch depends on the
    sign of the discriminant b^2 - 4ac.  Raises PoleOnSegment when the
    quadratic has a real root inside the interval.
    """
    a, b, c, t0, t1 = map(float, (a, b, c, t0, t1))
    if t1 < t0:
        raise ValueError("need t0 <= t1")
    if t1 == t0:
        return 0.0
    scale = max(abs(a), abs(b), abs(c), 1.0)
    tol = 1e-12 * scale

    def check_pole(root: float) -> None:
        if t0 - 1e-12 <= root <= t1 + 1e-12:
            raise PoleOnSegment(f"denominator vanishes at t = {root}")

    if abs(a) <= tol:
        if abs(b) <= tol:
            if abs(c) <= tol:
                raise PoleOnSegment("denominator is identically zero")
            return (t1 - t0) / c
        check_pole(-c / b)
        return (math.log(abs(b * t1 + c)) - math.log(abs(b * t0 + c))) / b

    disc = b * b - 4.0 * a * c
    if disc < -tol * scale:
        s = math.sqrt(-disc)
        return 2.0 / s * (math.atan((2 * a * t1 + b) / s) - math.atan((2 * a * t0 + b) / s))
    if disc <= tol * scale:
        check_pole(-b / (2 * a))
        return -2.0 / (2 * a * t1 + b) + 2.0 / (2 * a * t0 + b)
    s = math.sqrt(disc)
    for root in ((-b - s) / (2 * a), (-b + s) / (2 * a)):
        check_pole(root)

    def prim(t: float) -> float:
        return math.log(abs((2 * a * t + b - s) / (2 * a * t + b + s))) / s

    return prim(t1) - prim(t0)

"""Cycles: the quadratic curves k*Q(u,v) - 2*l*u - 2*n*v + m = 0 that play
the role of geodesics, with Q = u^2 (parabola mode, dual plane), u^2 + v^2
(circle mode, complex plane) or u^2 - v^2 (hyperbola mode, double plane).

The parabola family (sb + 4t^2) u^2 - 8t u - 4v + 4 = 0 collects, for each
parabolic flavor sb, every geodesic through the imaginary unit; the other
two modes carry the elliptic and hyperbolic geodesics through i.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .curves import PolyCurve
from .errors import DegenerateCycle, NoRealSolution, NotInUpperHalfPlane
from .hypercomplex import GeometryKind, HNumber

CANON_TOL = 1e-9


class ParabolicFlavor(enum.IntEnum):
    """Second signature parameter: which inverse sine the flavor uses."""

    PE = -1
    PP = 0
    PH = 1

    @property
    def sign(self) -> int:
        return int(self)

    @classmethod
    def parse(cls, text: str) -> "ParabolicFlavor":
        t = text.strip().lower()
        for f in cls:
            if t in (f.name.lower(), str(f.value)):
                return f
        raise ValueError(f"unknown flavor {text!r}")


class QuadraticMode(enum.Enum):
    PARABOLA = "parabola"
    CIRCLE = "circle"
    HYPERBOLA = "hyperbola"


def _quad(mode: QuadraticMode, u, v):
    if mode is QuadraticMode.PARABOLA:
        return u * u
    if mode is QuadraticMode.CIRCLE:
        return u * u + v * v
    return u * u - v * v


@dataclass(frozen=True)
class Cycle:
    k: float
    l: float
    n: float
    m: float
    mode: QuadraticMode = QuadraticMode.PARABOLA
    degenerate: bool = False

    def evaluate(self, u, v):
        """Left-hand side of the cycle equation; zero on the curve."""
        return self.k * _quad(self.mode, u, v) - 2.0 * self.l * u - 2.0 * self.n * v + self.m

    def coefficients(self) -> tuple[float, float, float, float]:
        return (self.k, self.l, self.n, self.m)

    def canonical(self) -> "Cycle":
        """Scale so the largest-magnitude coefficient becomes +1."""
        coeffs = self.coefficients()
        top = max(coeffs, key=abs)
        if abs(top) <= CANON_TOL:
            raise DegenerateCycle("all coefficients vanish")
        s = 1.0 / top
        return Cycle(self.k * s, self.l * s, self.n * s, self.m * s, self.mode, self.degenerate)

    def is_vertical_line(self, tol: float = CANON_TOL) -> bool:
        return abs(self.k) <= tol and abs(self.n) <= tol and abs(self.l) > tol

    def vertical_line_u(self) -> float:
        if not self.is_vertical_line():
            raise DegenerateCycle("not a vertical line")
        return self.m / (2.0 * self.l)

    def graph_v(self, u):
        """v(u) for parabola-mode cycles with n != 0."""
        if self.mode is not QuadraticMode.PARABOLA or abs(self.n) <= CANON_TOL:
            raise DegenerateCycle("cycle is not a graph over u")
        return (self.k * np.asarray(u, dtype=float) ** 2 - 2.0 * self.l * np.asarray(u, dtype=float) + self.m) / (
            2.0 * self.n
        )


def coefficient_tag(c: Cycle) -> str:
    """Canonical coefficients as a short "(k,[l,n],m)" annotation string."""
    cc = c.canonical()
    return "({:.4g},[{:.4g},{:.4g}],{:.4g})".format(cc.k, cc.l, cc.n, cc.m)


def parabolic_geodesic(flavor: ParabolicFlavor, t: float) -> Cycle:
    """Family member through i with parameter t: (sb+4t^2)u^2 - 8tu - 4v + 4 = 0."""
    sb = int(flavor)
    t = float(t)
    return Cycle(sb + 4.0 * t * t, 4.0 * t, 2.0, 4.0, QuadraticMode.PARABOLA)


def elliptic_geodesic_through_i(t: float) -> Cycle:
    """(x^2+y^2) sin 2t - 2x cos 2t - sin 2t = 0; t = 0 is the vertical axis."""
    s, c = math.sin(2.0 * t), math.cos(2.0 * t)
    return Cycle(s, c, 0.0, -s, QuadraticMode.CIRCLE)


def hyperbolic_geodesics_through_i(t: float) -> tuple[Cycle, Cycle]:
    """Space-like and time-like geodesics through i in the double plane.

    Space-like: x^2 - y^2 - 2tx + 1 = 0.
    Time-like:  (x^2 - y^2) sinh 2t - 2x cosh 2t + sinh 2t = 0.
    """
    sh, ch = math.sinh(2.0 * t), math.cosh(2.0 * t)
    spacelike = Cycle(1.0, float(t), 0.0, 1.0, QuadraticMode.HYPERBOLA)
    timelike = Cycle(sh, ch, 0.0, sh, QuadraticMode.HYPERBOLA)
    return spacelike, timelike


def is_focal_orthogonal(c: Cycle, flavor: ParabolicFlavor, tol: float = CANON_TOL) -> bool:
    """Check l^2 + sb*n^2 - m*k = 0 on the canonically scaled cycle."""
    cc = c.canonical()
    return abs(cc.l * cc.l + int(flavor) * cc.n * cc.n - cc.m * cc.k) <= tol


def _uv(p) -> tuple[float, float]:
    if isinstance(p, HNumber):
        return (p.re, p.im)
    return (float(p[0]), float(p[1]))


def geodesics_between(w1, w2, flavor: ParabolicFlavor) -> list[Cycle]:
    """All geodesics of the flavor's family through both points.

    The pair is normalized so w1 sits at i, the family equation is solved
    for t there, and the cycles are pulled back.  Pairs sharing a real part
    get the vertical line, flagged degenerate.  Results are ordered by |t|
    (smaller first); that order defines the branch index elsewhere.
    """
    u1, v1 = _uv(w1)
    u2, v2 = _uv(w2)
    if v1 <= 0 or v2 <= 0:
        raise NotInUpperHalfPlane("both points need Im > 0")
    if u1 == u2:
        return [Cycle(0.0, 0.5, 0.0, u1, QuadraticMode.PARABOLA, degenerate=True)]

    up = (u2 - u1) / v1
    vp = v2 / v1
    sb = int(flavor)
    # (sb + 4t^2) up^2 - 8 t up - 4 vp + 4 = 0, quadratic in t
    radicand = 4.0 * vp - sb * up * up
    if radicand < -CANON_TOL:
        raise NoRealSolution("no family member joins the pair")
    root = math.sqrt(max(radicand, 0.0))
    disc = 4.0 * abs(up) * root  # sqrt of the quadratic discriminant
    ts = [(8.0 * up + s * disc) / (8.0 * up * up) for s in (+1.0, -1.0)]
    if disc <= CANON_TOL * max(1.0, abs(up)):
        ts = [ts[0]]

    out = []
    for t in sorted(set(ts), key=abs):
        base = parabolic_geodesic(flavor, t)
        k = base.k
        out.append(
            Cycle(
                k,
                k * u1 + base.l * v1,
                base.n * v1,
                k * u1 * u1 + 2.0 * base.l * v1 * u1 + base.m * v1 * v1,
                QuadraticMode.PARABOLA,
            )
        )
    return out


class FocusNotion(enum.Enum):
    USUAL_FOCUS = "usual-focus"
    VERTEX = "vertex"
    DIRECTRIX_NEAREST = "directrix-nearest"


def parabola_focus(c: Cycle, notion: FocusNotion) -> tuple[float, float]:
    """Named point of a parabola-mode cycle viewed as v = a u^2 + b u + c0."""
    if c.mode is not QuadraticMode.PARABOLA or abs(c.k) <= CANON_TOL or abs(c.n) <= CANON_TOL:
        raise DegenerateCycle("focus needs a genuine parabola graph")
    a = c.k / (2.0 * c.n)
    uv = c.l / c.k
    vv = float(c.graph_v(uv))
    phi = 1.0 / (4.0 * a)
    if notion is FocusNotion.VERTEX:
        return (uv, vv)
    if notion is FocusNotion.USUAL_FOCUS:
        return (uv, vv + phi)
    return (uv, vv - phi)


def axis_focus_report(flavor: ParabolicFlavor, ts, tol: float = CANON_TOL) -> dict[FocusNotion, bool]:
    """Which focus notions land on the real axis for every family member given."""
    out = {}
    for notion in FocusNotion:
        on_axis = True
        for t in ts:
            if abs(float(t)) < 1e-6:
                continue  # t = 0 members can degenerate to lines
            member = parabolic_geodesic(flavor, t)
            try:
                _, v = parabola_focus(member, notion)
            except DegenerateCycle:
                on_axis = False
                break
            if abs(v) > tol:
                on_axis = False
                break
        out[notion] = on_axis
    return out


def graph_positive_intervals(c: Cycle, lo: float, hi: float, margin: float = 0.0) -> list[tuple[float, float]]:
    """Subintervals of [lo, hi] where a parabola-mode graph has v > 0.

    Zero crossings are solved explicitly; a discriminant within relative
    tolerance of zero counts as a double root (graphs that touch v = 0
    still get cut there).
    """
    roots: list[float] = []
    if abs(c.k) <= CANON_TOL:
        if abs(c.l) > CANON_TOL:
            roots = [c.m / (2.0 * c.l)]
    else:
        disc = c.l * c.l - c.k * c.m
        scale = max(c.l * c.l, abs(c.k * c.m), 1.0)
        if abs(disc) <= 1e-9 * scale:
            roots = [c.l / c.k]
        elif disc > 0:
            r = math.sqrt(disc)
            roots = [(c.l - r) / c.k, (c.l + r) / c.k]
    cuts = sorted({lo, hi, *[r for r in roots if lo < r < hi]})
    out = []
    for a, b in zip(cuts[:-1], cuts[1:]):
        mid = 0.5 * (a + b)
        if float(c.graph_v(mid)) > 0.0:
            out.append((a + margin, b - margin))
    return [(a, b) for a, b in out if b > a]


def sample_points(c: Cycle, n: int, lo: float, hi: float) -> list[tuple[float, float]]:
    """Up to n points with v > 0 on the cycle, swept over [lo, hi].

    The sweep variable is u for graphs and lines, the angle for circles.
    """
    pts: list[tuple[float, float]] = []
    if c.is_vertical_line():
        u0 = c.vertical_line_u()
        for v in np.linspace(max(lo, 1e-6), hi, n):
            if v > 0:
                pts.append((u0, float(v)))
        return pts
    if c.mode is QuadraticMode.PARABOLA:
        us = np.linspace(lo, hi, n)
        vs = c.graph_v(us)
        return [(float(u), float(v)) for u, v in zip(us, vs) if v > 0]
    if c.mode is QuadraticMode.CIRCLE:
        if abs(c.k) <= CANON_TOL:
            # line -2lu - 2nv + m = 0
            us = np.linspace(lo, hi, n)
            if abs(c.n) <= CANON_TOL:
                return [(c.m / (2 * c.l), float(v)) for v in np.linspace(0.05, hi, n) if v > 0]
            vs = (c.m - 2.0 * c.l * us) / (2.0 * c.n)
            return [(float(u), float(v)) for u, v in zip(us, vs) if v > 0]
        cx, cy = c.l / c.k, c.n / c.k
        r2 = (c.l * c.l + c.n * c.n - c.m * c.k) / (c.k * c.k)
        if r2 <= 0:
            raise DegenerateCycle("circle with non-positive radius")
        r = math.sqrt(r2)
        for phi in np.linspace(0.0, 2.0 * math.pi, n, endpoint=False):
            u, v = cx + r * math.cos(phi), cy + r * math.sin(phi)
            if v > 0 and lo <= u <= hi:
                pts.append((u, v))
        return pts
    # hyperbola mode: solve the quadratic in v for each u
    us = np.linspace(lo, hi, n)
    for u in us:
        # -k v^2 - 2n v + (k u^2 - 2l u + m) = 0
        for v in np.roots([-c.k, -2.0 * c.n, c.k * u * u - 2.0 * c.l * u + c.m]):
            if abs(v.imag) < 1e-12 and v.real > 0:
                pts.append((float(u), float(v.real)))
    return pts


def fit_cycle(points, mode: QuadraticMode) -> Cycle:
    """Least-squares cycle through >= 4 points (SVD null vector)."""
    pts = [_uv(p) for p in points]
    if len(pts) < 4:
        raise DegenerateCycle("need at least 4 points")
    rows = [[_quad(mode, u, v), -2.0 * u, -2.0 * v, 1.0] for u, v in pts]
    _, _, vt = np.linalg.svd(np.array(rows))
    k, l, n, m = vt[-1]
    return Cycle(float(k), float(l), float(n), float(m), mode).canonical()


def elliptic_arc(z, w, n: int = 512) -> PolyCurve:
    """Geodesic arc of the complex half-plane between two points.

    A circle centered on the real axis, or the vertical segment when the
    points share a real part.  Returned as a sampled curve.
    """
    u1, v1 = _uv(z)
    u2, v2 = _uv(w)
    if v1 <= 0 or v2 <= 0:
        raise NotInUpperHalfPlane("both points need Im > 0")
    if u1 == u2:
        vs = np.linspace(v1, v2, n) if v2 > v1 else np.linspace(v2, v1, n)
        return PolyCurve(np.linspace(0.0, 1.0, n), np.full(n, u1), vs, GeometryKind.ELLIPTIC)
    x0 = (u2 * u2 + v2 * v2 - u1 * u1 - v1 * v1) / (2.0 * (u2 - u1))
    r = math.hypot(u1 - x0, v1)
    a1 = math.atan2(v1, u1 - x0)
    a2 = math.atan2(v2, u2 - x0)
    angles = np.linspace(a1, a2, n) if a2 > a1 else np.linspace(a2, a1, n)
    return PolyCurve(
        np.linspace(0.0, 1.0, n),
        x0 + r * np.cos(angles),
        r * np.sin(angles),
        GeometryKind.ELLIPTIC,
    )

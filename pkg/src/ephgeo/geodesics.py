"""Geodesics by distance additivity: slope field, numerical integration of
the slope ODE, family fitting, a grid shortest-path oracle, and the
triangle-inequality region classifier.

A geodesic is a curve along which the core distance is additive.  Requiring
additivity of d0 = sin_sb^{-1}(|u2-u1| / (2 sqrt(v1 v2))) for a pair with
w1 = i gives the slope at (u, v):

    dv/du = 2v/u - sqrt(|4v - sb u^2|) / u

whose solutions are exactly the family members (sb+4t^2)u^2-8tu-4v+4 = 0.
"""

from __future__ import annotations

import enum
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp
from scipy.sparse.csgraph import dijkstra as _dijkstra

from .curves import PolyCurve
from .cycles import Cycle, ParabolicFlavor, geodesics_between
from .distance import EQ_TOL, DistanceSpec, distance
from .errors import (
    DegenerateFit,
    NotInUpperHalfPlane,
    PointsNotOnCycle,
    StepTooLarge,
    UnsupportedGeometry,
    VerticalPair,
)
from .hypercomplex import GeometryKind, HNumber, point

STEP_ERR_BUDGET = 1e-6


def geodesic_slope(w1, w2, flavor: ParabolicFlavor) -> float:
    """Tangent slope dv/du at w2 of the additive geodesic through w1 and w2."""
    u1, v1 = (w1.re, w1.im) if isinstance(w1, HNumber) else (float(w1[0]), float(w1[1]))
    u2, v2 = (w2.re, w2.im) if isinstance(w2, HNumber) else (float(w2[0]), float(w2[1]))
    if v1 <= 0 or v2 <= 0:
        raise NotInUpperHalfPlane("both points need Im > 0")
    if u1 == u2:
        raise VerticalPair("slope is infinite for a vertical pair")
    du = u2 - u1
    rad = abs(4.0 * v1 * v2 - int(flavor) * du * du)
    return 2.0 * v2 / du - math.sqrt(rad) / du


def _ode_rhs(sb: int, u: float, v: float) -> float:
    return (2.0 * v - math.sqrt(abs(4.0 * v - sb * u * u))) / u


def _rk4_step(sb: int, u: float, v: float, h: float) -> float:
    k1 = _ode_rhs(sb, u, v)
    k2 = _ode_rhs(sb, u + h / 2, v + h / 2 * k1)
    k3 = _ode_rhs(sb, u + h / 2, v + h / 2 * k2)
    k4 = _ode_rhs(sb, u + h, v + h * k3)
    return v + h / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4)


def integrate_geodesic(
    flavor: ParabolicFlavor, direction: int, u_max: float, step: float
) -> PolyCurve:
    """Integrate the slope ODE away from i in the given direction.

    The ODE is singular at u = 0, where the limit slope (at v = 1) is 0, so
    this traces the principal (t = 0) member; the first step is seeded from
    the series v = 1 + sb u^2 / 4.  Fourth-order steps with step-doubling
    error control (budget 1e-6 per step); integration stops early if the
    curve reaches the half-plane boundary v = 0 before |u| = u_max.
    """
    if direction not in (1, -1):
        raise ValueError("direction must be +1 or -1")
    if not (u_max > 0 and step > 0 and step <= u_max):
        raise ValueError("need 0 < step <= u_max")
    sb = int(flavor)
    nsteps = max(2, int(math.ceil(u_max / step)))
    h = direction * u_max / nsteps

    ts = [0.0]
    us = [0.0]
    vs = [1.0]
    u = h
    v = 1.0 + sb * u * u / 4.0
    ts.append(abs(h))
    us.append(u)
    vs.append(v)
    for _ in range(nsteps - 1):
        full = _rk4_step(sb, u, v, h)
        half = _rk4_step(sb, u + h / 2, _rk4_step(sb, u, v, h / 2), h / 2)
        if abs(full - half) > STEP_ERR_BUDGET:
            raise StepTooLarge(f"local error {abs(full - half):.3e} at u = {u}")
        u += h
        v = half
        if v <= 1e-9:
            break
        ts.append(ts[-1] + abs(h))
        us.append(u)
        vs.append(v)
    return PolyCurve(np.array(ts), np.array(us), np.array(vs), GeometryKind.PARABOLIC)


def fit_geodesic_parameter(c: PolyCurve, flavor: ParabolicFlavor) -> tuple[float, float]:
    """Best family parameter for a sampled curve and its worst residual.

    Minimizes the sum of squared family-equation residuals, which is a
    quartic polynomial in t; the minimum is found among the real roots of
    its derivative.  Needs at least 3 samples away from u = 0.
    """
    sb = int(flavor)
    mask = np.abs(c.u) > 1e-9
    if int(mask.sum()) < 3:
        raise DegenerateFit("need at least 3 samples off the axis u = 0")
    u = c.u
    v = c.v
    A = 4.0 * u * u
    B = -8.0 * u
    C = sb * u * u - 4.0 * v + 4.0
    sse = np.array(
        [
            np.sum(A * A),
            2.0 * np.sum(A * B),
            np.sum(B * B + 2.0 * A * C),
            2.0 * np.sum(B * C),
            np.sum(C * C),
        ]
    )
    roots = np.roots(np.polyder(sse))
    cand = [float(r.real) for r in roots if abs(r.imag) < 1e-9]
    best = min(cand, key=lambda t: float(np.polyval(sse, t)))
    resid = float(np.max(np.abs((sb + 4 * best * best) * u * u - 8 * best * u - 4 * v + 4)))
    return best, resid


def additivity_defect(spec: DistanceSpec, c: Cycle, triples) -> float:
    """Worst additivity defect |d(w1,w3) - d(w1,w2) - d(w2,w3)| over triples.

    Each triple must be ordered by u and lie on the (canonically scaled)
    cycle to 1e-9.
    """
    if spec.geometry is not GeometryKind.PARABOLIC:
        raise ValueError("additivity runs in the parabolic plane")
    cc = c.canonical()
    worst = 0.0
    for triple in triples:
        pts = [(float(p[0]), float(p[1])) for p in triple]
        if not (pts[0][0] < pts[1][0] < pts[2][0]):
            raise ValueError("triple must be ordered by u")
        for u, v in pts:
            if abs(cc.evaluate(u, v)) > 1e-9:
                raise PointsNotOnCycle(f"({u}, {v}) off the cycle")
        h = [point(u, v, GeometryKind.PARABOLIC) for u, v in pts]
        d13 = distance(spec, h[0], h[2])[0]
        d12 = distance(spec, h[0], h[1])[0]
        d23 = distance(spec, h[1], h[2])[0]
        worst = max(worst, abs(d13 - d12 - d23))
    return worst


# 8-connectivity plus knight moves
_GRID_OFFSETS = [
    (1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (1, -1), (-1, 1), (-1, -1),
    (1, 2), (1, -2), (-1, 2), (-1, -2), (2, 1), (2, -1), (-2, 1), (-2, -1),
]


@dataclass(frozen=True)
class GridPath:
    """Shortest-path value between the snapped endpoints."""

    value: float
    source: tuple[float, float]
    target: tuple[float, float]
    resolution: int


def grid_shortest_path(kind: GeometryKind, z, w, resolution: int = 256, bbox=None) -> GridPath:
    """Metric-weighted grid shortest path, an oracle for the closed form.

    Only the elliptic plane is supported.  Both endpoints snap to the
    nearest grid node (the snapped points are returned so the caller can
    evaluate closed forms at identical points).  Edges connect the 16-cell
    neighborhood; each edge weighs the Euclidean offset by 1/v at the
    midpoint, matching ds = |dw| / v.
    """
    if kind is not GeometryKind.ELLIPTIC:
        raise UnsupportedGeometry("grid oracle exists for the elliptic plane only")
    if resolution < 64:
        raise ValueError("resolution must be at least 64")
    u1, v1 = (z.re, z.im) if isinstance(z, HNumber) else (float(z[0]), float(z[1]))
    u2, v2 = (w.re, w.im) if isinstance(w, HNumber) else (float(w[0]), float(w[1]))
    if v1 <= 0 or v2 <= 0:
        raise NotInUpperHalfPlane("both points need Im > 0")

    if bbox is None:
        pad = max(1.0, abs(u1 - u2), abs(v1 - v2))
        ulo, uhi = min(u1, u2) - pad, max(u1, u2) + pad
        vlo, vhi = min(v1, v2) / 4.0, max(v1, v2) + pad
    else:
        (ulo, uhi), (vlo, vhi) = bbox
        if not (ulo <= min(u1, u2) and uhi >= max(u1, u2) and 0 < vlo <= min(v1, v2) and vhi >= max(v1, v2)):
            raise ValueError("bbox must contain both points with v > 0")

    n = int(resolution)
    us = np.linspace(ulo, uhi, n)
    vs = np.linspace(vlo, vhi, n)
    hu, hv = us[1] - us[0], vs[1] - vs[0]
    V = np.broadcast_to(vs[None, :], (n, n))  # index [iu, iv]

    rows, cols, data = [], [], []
    for du, dv in _GRID_OFFSETS:
        iu0, iu1 = max(0, -du), n - max(0, du)
        iv0, iv1 = max(0, -dv), n - max(0, dv)
        src = np.arange(iu0, iu1)[:, None] * n + np.arange(iv0, iv1)[None, :]
        dst = (np.arange(iu0, iu1)[:, None] + du) * n + (np.arange(iv0, iv1)[None, :] + dv)
        vmid = (V[iu0:iu1, iv0:iv1] + V[iu0 + du : iu1 + du, iv0 + dv : iv1 + dv]) / 2.0
        wgt = math.hypot(du * hu, dv * hv) / vmid
        rows.append(src.ravel())
        cols.append(dst.ravel())
        data.append(wgt.ravel())
    graph = sp.csr_matrix(
        (np.concatenate(data), (np.concatenate(rows), np.concatenate(cols))), shape=(n * n, n * n)
    )

    def snap(pu: float, pv: float) -> tuple[int, int]:
        return (
            int(np.clip(round((pu - ulo) / hu), 0, n - 1)),
            int(np.clip(round((pv - vlo) / hv), 0, n - 1)),
        )

    si, ti = snap(u1, v1), snap(u2, v2)
    dist = _dijkstra(graph, directed=True, indices=si[0] * n + si[1])
    return GridPath(
        float(dist[ti[0] * n + ti[1]]),
        (float(us[si[0]]), float(vs[si[1]])),
        (float(us[ti[0]]), float(vs[ti[1]])),
        n,
    )


class TriangleClass(enum.Enum):
    STRICT = "strict"
    REVERSE = "reverse"
    EQUALITY = "equality"
    DEGENERATE = "degenerate"
    OUTSIDE_STRIP = "outside-strip"


def triangle_compare(spec: DistanceSpec, w1: HNumber, w2: HNumber, z: HNumber):
    """diff = d(w1,w2) - (d(w1,z) + d(z,w2)) and its class, strip ignored."""
    if z.re == w1.re or z.re == w2.re:
        return math.nan, TriangleClass.DEGENERATE
    d12 = distance(spec, w1, w2)[0]
    total = distance(spec, w1, z)[0] + distance(spec, z, w2)[0]
    diff = d12 - total
    if abs(diff) <= EQ_TOL:
        return diff, TriangleClass.EQUALITY
    return diff, (TriangleClass.STRICT if diff < 0 else TriangleClass.REVERSE)


def classify_triangle(
    spec: DistanceSpec, w1: HNumber, w2: HNumber, z: HNumber, branch: int = 0
) -> TriangleClass:
    """Side of the triangle inequality for z against the pair (w1, w2).

    Strict means d(w1,w2) < d(w1,z) + d(z,w2); Reverse means the inequality
    flips.  The dividing locus inside the strip is the branch geodesic
    through the pair.  The dichotomy theorem is guaranteed for linear
    relabels of the core (additivity enters its proof); other monotone
    labels are accepted but come without that guarantee.
    """
    if spec.geometry is not GeometryKind.PARABOLIC:
        raise ValueError("triangle regions live in the parabolic plane")
    if not (w1.re < w2.re):
        raise ValueError("need Re w1 < Re w2")
    branches = geodesics_between(w1, w2, spec.flavor)
    if not (0 <= branch < len(branches)):
        raise ValueError(f"branch {branch} does not exist ({len(branches)} available)")
    if z.re == w1.re or z.re == w2.re:
        return TriangleClass.DEGENERATE
    if not (w1.re < z.re < w2.re):
        return TriangleClass.OUTSIDE_STRIP
    return triangle_compare(spec, w1, w2, z)[1]


@dataclass(frozen=True)
class RegionRaster:
    us: np.ndarray           # cell-center u per column i
    vs: np.ndarray           # cell-center v per row j
    classes: list            # classes[i][j] -> TriangleClass
    cycles: list             # bounding cycles used for the equality bands


def _threads() -> int:
    raw = os.environ.get("EPH_THREADS", "")
    if raw.strip():
        try:
            return max(1, int(raw))
        except ValueError as exc:
            raise ValueError(f"EPH_THREADS must be an integer, got {raw!r}") from exc
    return min(8, os.cpu_count() or 1)


def region_raster(
    spec: DistanceSpec,
    w1: HNumber,
    w2: HNumber,
    bbox,
    nx: int,
    ny: int,
    mode: str = "strip",
) -> RegionRaster:
    """Classify cell centers of a raster over bbox = ((ulo,uhi),(vlo,vhi)).

    mode="strip" follows the classifier contract (cells outside the strip
    are OutsideStrip); mode="full" compares everywhere, which is what the
    region figure uses (the reverse region continues outside the strip,
    bounded there by the second parabola).  Cells whose corners straddle
    either bounding geodesic are marked Equality.  Cell work is pure, so
    rows are evaluated in parallel (EPH_THREADS caps the pool).
    """
    if mode not in ("strip", "full"):
        raise ValueError("mode must be 'strip' or 'full'")
    if spec.geometry is not GeometryKind.PARABOLIC:
        raise ValueError("triangle regions live in the parabolic plane")
    if not (w1.re < w2.re):
        raise ValueError("need Re w1 < Re w2")
    (ulo, uhi), (vlo, vhi) = bbox
    if not (nx >= 2 and ny >= 2 and uhi > ulo and vhi > vlo and vlo >= 0):
        raise ValueError("bad raster window")
    du = (uhi - ulo) / nx
    dv = (vhi - vlo) / ny
    us = ulo + (np.arange(nx) + 0.5) * du
    vs = vlo + (np.arange(ny) + 0.5) * dv
    cycles = [c for c in geodesics_between(w1, w2, spec.flavor)]

    def straddles(cu: float, cv: float) -> bool:
        for c in cycles:
            if c.is_vertical_line():
                continue
            corners = [
                c.evaluate(cu - du / 2, cv - dv / 2),
                c.evaluate(cu + du / 2, cv - dv / 2),
                c.evaluate(cu - du / 2, cv + dv / 2),
                c.evaluate(cu + du / 2, cv + dv / 2),
            ]
            if min(corners) <= 0.0 <= max(corners):
                return True
        return False

    def column(i: int) -> list:
        cu = float(us[i])
        out = []
        for j in range(ny):
            cv = float(vs[j])
            if cv <= 0:
                out.append(TriangleClass.DEGENERATE)
                continue
            zp = point(cu, cv, spec.geometry)
            if cu == w1.re or cu == w2.re:
                cls = TriangleClass.DEGENERATE
            elif mode == "strip" and not (w1.re < cu < w2.re):
                cls = TriangleClass.OUTSIDE_STRIP
            else:
                cls = triangle_compare(spec, w1, w2, zp)[1]
            if cls in (TriangleClass.STRICT, TriangleClass.REVERSE) and straddles(cu, cv):
                cls = TriangleClass.EQUALITY
            out.append(cls)
        return out

    with ThreadPoolExecutor(max_workers=_threads()) as pool:
        classes = list(pool.map(column, range(nx)))
    return RegionRaster(us, vs, classes, cycles)

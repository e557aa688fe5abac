"""Determinant-one Moebius maps w -> (a*w + b) / (c*w + d) and the three
one-parameter subgroups fixing the imaginary unit.

The same real matrix acts on all three number systems; only the division
in HNumber differs.  Derivatives of the action at i reduce, for subgroup
elements, to rotation / shear / boost matrices with doubled parameter.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .curves import PolyCurve
from .errors import NotInUpperHalfPlane, PointAtInfinity, ZeroDivisor
from .hypercomplex import GeometryKind, HNumber, imaginary_unit

DET_TOL = 1e-9        # constructor acceptance band around det = 1
DET_DRIFT = 1e-12     # compose() renormalizes beyond this drift


class SubgroupKind(enum.Enum):
    K = "K"            # rotations
    NPRIME = "Nprime"  # lower-triangular shears
    APRIME = "Aprime"  # boosts

    @classmethod
    def parse(cls, text: str) -> "SubgroupKind":
        t = text.strip().lower()
        for k in cls:
            if t == k.value.lower() or t == k.name.lower():
                return k
        raise ValueError(f"unknown subgroup {text!r}")


def default_subgroup(kind: GeometryKind) -> SubgroupKind:
    """The i-stabilizing subgroup whose orbits are equidistant in this plane."""
    if kind is GeometryKind.ELLIPTIC:
        return SubgroupKind.K
    if kind is GeometryKind.PARABOLIC:
        return SubgroupKind.NPRIME
    return SubgroupKind.APRIME


@dataclass(frozen=True)
class MoebiusMap:
    a: float
    b: float
    c: float
    d: float

    def __post_init__(self) -> None:
        det = self.a * self.d - self.b * self.c
        if not math.isfinite(det) or abs(det - 1.0) > DET_TOL:
            raise ValueError(f"determinant {det} is not 1")

    @classmethod
    def identity(cls) -> "MoebiusMap":
        return cls(1.0, 0.0, 0.0, 1.0)

    def matrix(self) -> np.ndarray:
        return np.array([[self.a, self.b], [self.c, self.d]], dtype=float)

    def compose(self, other: "MoebiusMap") -> "MoebiusMap":
        """Map acting as self after other (matrix product self @ other)."""
        a = self.a * other.a + self.b * other.c
        b = self.a * other.b + self.b * other.d
        c = self.c * other.a + self.d * other.c
        d = self.c * other.b + self.d * other.d
        det = a * d - b * c
        if abs(det - 1.0) > DET_DRIFT:
            r = math.sqrt(det)
            a, b, c, d = a / r, b / r, c / r, d / r
        return MoebiusMap(a, b, c, d)

    def inverse(self) -> "MoebiusMap":
        return MoebiusMap(self.d, -self.b, -self.c, self.a)


def subgroup_element(kind: SubgroupKind, param: float) -> MoebiusMap:
    p = float(param)
    if kind is SubgroupKind.K:
        return MoebiusMap(math.cos(p), -math.sin(p), math.sin(p), math.cos(p))
    if kind is SubgroupKind.NPRIME:
        return MoebiusMap(1.0, 0.0, p, 1.0)
    return MoebiusMap(math.cosh(p), math.sinh(p), math.sinh(p), math.cosh(p))


def apply(g: MoebiusMap, w: HNumber) -> HNumber:
    """Evaluate g at w; PointAtInfinity when the denominator collapses."""
    kind = w.kind
    num = w.scaled(g.a) + HNumber(g.b, 0.0, kind)
    den = w.scaled(g.c) + HNumber(g.d, 0.0, kind)
    try:
        return num / den
    except ZeroDivisor as exc:
        raise PointAtInfinity(f"image of {w} under {g} is at infinity") from exc


def fixes_i(g: MoebiusMap, kind: GeometryKind, tol: float = 1e-9) -> bool:
    i = imaginary_unit(kind)
    try:
        return apply(g, i).is_close(i, tol)
    except PointAtInfinity:
        return False


def map_point_to_i(w0: HNumber) -> MoebiusMap:
    """The det-1 affine map sending w0 = u + i*v to i, i.e. w -> (w - u)/v."""
    if w0.im <= 0:
        raise NotInUpperHalfPlane(f"{w0} has Im <= 0")
    r = math.sqrt(w0.im)
    return MoebiusMap(1.0 / r, -w0.re / r, 0.0, r)


def jacobian_at_i(kind: SubgroupKind, param: float) -> np.ndarray:
    """Real 2x2 derivative of the subgroup action at the fixed point i.

    Each element acts at i with its parameter doubled: K(theta) as a rotation
    by 2*theta, N'(t) as a shear by 2*t, A'(alpha) as a boost by 2*alpha.
    With the matrix conventions of subgroup_element the sense is reversed,
    w -> (a*w + b)/(c*w + d) differentiating to 1/(c*i + d)^2.
    """
    p = float(param)
    if kind is SubgroupKind.K:
        c, s = math.cos(2 * p), math.sin(2 * p)
        return np.array([[c, s], [-s, c]])
    if kind is SubgroupKind.NPRIME:
        return np.array([[1.0, 0.0], [-2 * p, 1.0]])
    ch, sh = math.cosh(2 * p), math.sinh(2 * p)
    return np.array([[ch, -sh], [-sh, ch]])


def orbit_points(kind: SubgroupKind, w0: HNumber, params) -> PolyCurve:
    """Orbit of w0 under the subgroup, sampled at the given parameters.

    Parameters must be strictly increasing; they become the curve parameter.
    """
    ts = np.asarray(list(params), dtype=float)
    pts = [apply(subgroup_element(kind, t), w0) for t in ts]
    return PolyCurve(ts, np.array([p.re for p in pts]), np.array([p.im for p in pts]), w0.kind)


def random_det_one(rng: np.random.Generator, spread: float = 1.0) -> MoebiusMap:
    """Well-conditioned random determinant-one map (rotation * boost * shear)."""
    theta = rng.uniform(0.0, 2.0 * math.pi)
    alpha = rng.uniform(-spread, spread)
    x = rng.uniform(-2.0 * spread, 2.0 * spread)
    k = subgroup_element(SubgroupKind.K, theta)
    a = MoebiusMap(math.exp(alpha), 0.0, 0.0, math.exp(-alpha))
    n = MoebiusMap(1.0, x, 0.0, 1.0)
    return k.compose(a).compose(n)

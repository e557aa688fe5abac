"""Invariant point-pair functions and distances.

Everything SL(2,R)-invariant about a pair boils down to
F(z, w) = |z - w|_sigma / sqrt(Im z * Im w); any invariant distance is a
monotone relabel h of the canonical core d0 = sin_sb^{-1}(F / 2), where the
inverse sine is picked by the flavor (sb = -1 -> sinh^{-1}, 0 -> doubling,
+1 -> sin^{-1}); the hyperbolic plane picks the branch per interval type.
The Cayley transform moves the same structure onto flavored unit disks.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .cycles import ParabolicFlavor
from .errors import (
    DomainExceeded,
    NonMonotoneSamples,
    NotInUpperHalfPlane,
    OutsideDisk,
)
from .hypercomplex import GeometryKind, HNumber

LIGHT_TOL = 1e-12
EQ_TOL = 1e-9


class IntervalType(enum.Enum):
    SPACELIKE = "spacelike"
    LIGHTLIKE = "lightlike"
    TIMELIKE = "timelike"


def interval_type(z: HNumber, w: HNumber) -> IntervalType:
    d = z - w
    q = d.re * d.re - d.im * d.im
    if abs(q) <= LIGHT_TOL:
        return IntervalType.LIGHTLIKE
    return IntervalType.SPACELIKE if q > 0 else IntervalType.TIMELIKE


def invariant_ratio(z: HNumber, w: HNumber) -> float:
    """F(z, w) = sqrt(|Re d^2 - sigma Im d^2|) / sqrt(Im z Im w), d = z - w."""
    if z.im <= 0 or w.im <= 0:
        raise NotInUpperHalfPlane("both points need Im > 0")
    d = z - w
    return math.sqrt(abs(d.modulus_sq())) / math.sqrt(z.im * w.im)


def inverse_sine(flavor: ParabolicFlavor, t: float) -> float:
    """sinh^{-1} t, 2t, or sin^{-1} t according to the flavor."""
    sb = int(flavor)
    if sb == -1:
        return math.asinh(t)
    if sb == 0:
        return 2.0 * t
    if abs(t) > 1.0 + 1e-12:
        raise DomainExceeded(f"inverse sine argument {t} outside [-1, 1]")
    return math.asin(min(max(t, -1.0), 1.0))


@dataclass(frozen=True)
class Relabel:
    """Monotone relabel h applied on top of the canonical core."""

    name: str
    fn: object = field(compare=False, repr=False)
    domain_hi: float = 10.0

    def __call__(self, t: float) -> float:
        return float(self.fn(t))

    @classmethod
    def identity(cls) -> "Relabel":
        return cls("identity", lambda t: t)

    @classmethod
    def scale(cls, c: float) -> "Relabel":
        c = float(c)
        if c <= 0:
            raise ValueError("scale must be positive")
        return cls(f"scale:{c:g}", lambda t: c * t)

    @classmethod
    def double(cls) -> "Relabel":
        return cls("double", lambda t: 2.0 * t)

    @classmethod
    def sinh_inv(cls) -> "Relabel":
        return cls("sinhinv", math.asinh)

    @classmethod
    def sin_inv(cls) -> "Relabel":
        return cls("sininv", math.asin, domain_hi=1.0)

    @classmethod
    def from_table(cls, ts, hs) -> "Relabel":
        ts = np.asarray(ts, dtype=float)
        hs = np.asarray(hs, dtype=float)
        if ts.size < 2 or ts.shape != hs.shape:
            raise ValueError("need matching tables with at least 2 rows")
        if np.any(np.diff(ts) <= 0):
            raise NonMonotoneSamples("table abscissae must increase")
        if np.any(np.diff(hs) <= -1e-12):
            raise NonMonotoneSamples("table values must be non-decreasing")
        return cls("table", lambda t: float(np.interp(t, ts, hs)), domain_hi=float(ts[-1]))

    @classmethod
    def parse(cls, text: str) -> "Relabel":
        t = text.strip().lower()
        if t == "identity":
            return cls.identity()
        if t == "double":
            return cls.double()
        if t == "sinhinv":
            return cls.sinh_inv()
        if t == "sininv":
            return cls.sin_inv()
        if t.startswith("scale:"):
            return cls.scale(float(t.split(":", 1)[1]))
        raise ValueError(f"unknown label {text!r}")


@dataclass(frozen=True)
class DistanceSpec:
    """A choice of geometry, parabolic flavor and relabel.

    The flavor matters only for the parabolic plane; the elliptic core is
    sinh^{-1}-valued and the hyperbolic core picks sin^{-1}/sinh^{-1} by the
    interval type of the pair.  Construction verifies the label is monotone
    with h(0) = 0 by sampling.
    """

    geometry: GeometryKind
    flavor: ParabolicFlavor = ParabolicFlavor.PP
    label: Relabel = field(default_factory=Relabel.identity)

    def __post_init__(self) -> None:
        ts = np.linspace(0.0, self.label.domain_hi * (1.0 - 1e-9), 1000)
        vals = np.array([self.label(t) for t in ts])
        if abs(vals[0]) > 1e-12:
            raise NonMonotoneSamples("label must satisfy h(0) = 0")
        if np.any(np.diff(vals) <= 0):
            raise NonMonotoneSamples("label must be strictly increasing")


def core_distance(spec: DistanceSpec, z: HNumber, w: HNumber) -> tuple[float, IntervalType]:
    """Canonical core d0 = sin_sb^{-1}(F/2) and the pair's interval type."""
    if z.kind != spec.geometry or w.kind != spec.geometry:
        raise ValueError("point kind does not match the spec geometry")
    if z.im <= 0 or w.im <= 0:
        raise NotInUpperHalfPlane("both points need Im > 0")
    itype = interval_type(z, w)
    half = invariant_ratio(z, w) / 2.0
    g = spec.geometry
    if g is GeometryKind.ELLIPTIC:
        return math.asinh(half), itype
    if g is GeometryKind.PARABOLIC:
        return inverse_sine(spec.flavor, half), itype
    # hyperbolic: branch by interval type
    if itype is IntervalType.LIGHTLIKE:
        return 0.0, itype
    if itype is IntervalType.SPACELIKE:
        return inverse_sine(ParabolicFlavor.PH, half), itype
    return math.asinh(half), itype


def distance(spec: DistanceSpec, z: HNumber, w: HNumber) -> tuple[float, IntervalType]:
    """Relabelled invariant distance: h(d0) and the pair's interval type."""
    core, itype = core_distance(spec, z, w)
    return spec.label(core), itype


def cayley(w: HNumber, flavor: ParabolicFlavor) -> HNumber:
    """Disk coordinates of a dual-plane point: w -> (2w - e)/(sb e w + 2).

    Evaluated in dual arithmetic with the flavor sb as an explicit scalar
    coefficient (e is the dual unit, e^2 = 0).  The real axis lands on the
    disk boundary 1 + 2v + sb u^2 = 0.
    """
    if w.kind is not GeometryKind.PARABOLIC:
        raise ValueError("Cayley transform acts on the dual plane")
    e = HNumber(0.0, 1.0, GeometryKind.PARABOLIC)
    two = HNumber(2.0, 0.0, GeometryKind.PARABOLIC)
    num = w.scaled(2.0) - e
    den = (e * w).scaled(float(int(flavor))) + two
    return num / den


def cayley_inverse(p: HNumber, flavor: ParabolicFlavor) -> HNumber:
    """Half-plane coordinates of a disk point: p -> (2p + e)/(-sb e p + 2)."""
    if p.kind is not GeometryKind.PARABOLIC:
        raise ValueError("Cayley transform acts on the dual plane")
    e = HNumber(0.0, 1.0, GeometryKind.PARABOLIC)
    two = HNumber(2.0, 0.0, GeometryKind.PARABOLIC)
    num = p.scaled(2.0) + e
    den = (e * p).scaled(-float(int(flavor))) + two
    return num / den


def disk_distance(flavor: ParabolicFlavor, p1, p2) -> float:
    """Invariant distance on the flavored unit disk.

    d = sin_sb^{-1}( |u2 - u1| / sqrt((1 + 2v1 + sb u1^2)(1 + 2v2 + sb u2^2)) ).
    Points with non-positive radicand lie outside the disk.
    """
    sb = int(flavor)
    pts = []
    for p in (p1, p2):
        u, v = (p.re, p.im) if isinstance(p, HNumber) else (float(p[0]), float(p[1]))
        r = 1.0 + 2.0 * v + sb * u * u
        if r <= LIGHT_TOL:
            raise OutsideDisk(f"point ({u}, {v}) outside the flavor {sb} disk")
        pts.append((u, r))
    arg = abs(pts[1][0] - pts[0][0]) / math.sqrt(pts[0][1] * pts[1][1])
    return inverse_sine(flavor, arg)


@dataclass(frozen=True)
class RelabelFit:
    """Piecewise-linear reconstruction of a relabel from paired samples."""

    knots_t: np.ndarray
    knots_h: np.ndarray
    residual: float
    strictly_increasing: bool

    def __call__(self, t: float) -> float:
        return float(np.interp(t, self.knots_t, self.knots_h))


def fit_relabel(samples) -> RelabelFit:
    """Reconstruct h from pairs (F_i, f_i) of invariant and distance values.

    Sorted by F; ties in F are merged by averaging.  Raises
    NonMonotoneSamples when f decreases along increasing F beyond 1e-12.
    """
    pairs = sorted((float(a), float(b)) for a, b in samples)
    if len({round(a, 12) for a, _ in pairs}) < 10:
        raise NonMonotoneSamples("need at least 10 samples with distinct F values")
    fs = np.array([a for a, _ in pairs])
    hs = np.array([b for _, b in pairs])
    if np.any(np.diff(hs) < -1e-12):
        raise NonMonotoneSamples("distance samples decrease along the invariant")
    # merge near-duplicate abscissae
    knots_t, knots_h = [fs[0]], [hs[0]]
    counts = [1]
    for a, b in zip(fs[1:], hs[1:]):
        if a - knots_t[-1] <= 1e-12:
            knots_h[-1] = (knots_h[-1] * counts[-1] + b) / (counts[-1] + 1)
            counts[-1] += 1
        else:
            knots_t.append(a)
            knots_h.append(b)
            counts.append(1)
    kt = np.array(knots_t)
    kh = np.array(knots_h)
    fit = RelabelFit(kt, kh, 0.0, bool(np.all(np.diff(kh) > 0)))
    residual = float(np.max(np.abs(np.interp(fs, kt, kh) - hs)))
    return RelabelFit(kt, kh, residual, fit.strictly_increasing)

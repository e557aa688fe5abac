"""Sampled plane curves.

A PolyCurve is an ordered list of (T, (u, v)) samples with strictly
increasing T and v > 0 throughout.  Lengths and residuals elsewhere
interpolate these samples; nothing here knows about metrics.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import NotInUpperHalfPlane
from .hypercomplex import GeometryKind


@dataclass(frozen=True)
class PolyCurve:
    t: np.ndarray
    u: np.ndarray
    v: np.ndarray
    kind: GeometryKind

    def __post_init__(self) -> None:
        t = np.asarray(self.t, dtype=float)
        u = np.asarray(self.u, dtype=float)
        v = np.asarray(self.v, dtype=float)
        if not (t.shape == u.shape == v.shape) or t.ndim != 1 or t.size < 2:
            raise ValueError("need matching 1-d arrays with at least 2 samples")
        if not np.all(np.isfinite(t)) or not np.all(np.isfinite(u)) or not np.all(np.isfinite(v)):
            raise ValueError("samples must be finite")
        if np.any(np.diff(t) <= 0):
            raise ValueError("parameter must be strictly increasing")
        if np.any(v <= 0):
            raise NotInUpperHalfPlane("curve leaves the upper half-plane")
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)

    def __len__(self) -> int:
        return int(self.t.size)

    @classmethod
    def from_samples(cls, samples, kind: GeometryKind) -> "PolyCurve":
        """Build from an iterable of (T, (u, v)) pairs."""
        ts, us, vs = [], [], []
        for T, (u, v) in samples:
            ts.append(T)
            us.append(u)
            vs.append(v)
        return cls(np.array(ts), np.array(us), np.array(vs), kind)

    @classmethod
    def from_function(cls, fn, t0: float, t1: float, n: int, kind: GeometryKind) -> "PolyCurve":
        """Sample fn(T) -> (u, v) at n uniform parameters on [t0, t1]."""
        ts = np.linspace(t0, t1, n)
        pts = [fn(T) for T in ts]
        return cls(ts, np.array([p[0] for p in pts]), np.array([p[1] for p in pts]), kind)

    def resample(self, n: int) -> "PolyCurve":
        """Linear re-interpolation onto n uniform parameter values."""
        ts = np.linspace(self.t[0], self.t[-1], n)
        return PolyCurve(ts, np.interp(ts, self.t, self.u), np.interp(ts, self.t, self.v), self.kind)

    def transformed(self, fn) -> "PolyCurve":
        """Apply a pointwise map (u, v) -> (u', v'), keeping parameters."""
        pts = [fn(u, v) for u, v in zip(self.u, self.v)]
        return PolyCurve(self.t, np.array([p[0] for p in pts]), np.array([p[1] for p in pts]), self.kind)


def concatenate(first: PolyCurve, second: PolyCurve, tol: float = 1e-9) -> PolyCurve:
    """Join two curves whose endpoints agree; parameters of the second shift."""
    if first.kind != second.kind:
        raise ValueError("kind mismatch")
    if abs(first.u[-1] - second.u[0]) > tol or abs(first.v[-1] - second.v[0]) > tol:
        raise ValueError("curves do not share an endpoint")
    shift = first.t[-1] - second.t[0]
    return PolyCurve(
        np.concatenate([first.t, second.t[1:] + shift]),
        np.concatenate([first.u, second.u[1:]]),
        np.concatenate([first.v, second.v[1:]]),
        first.kind,
    )

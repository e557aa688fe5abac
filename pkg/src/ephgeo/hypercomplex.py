"""Two-component numbers a + i*b where i*i = sigma, sigma in {-1, 0, +1}.

sigma = -1 gives the complex numbers, sigma = 0 the dual numbers and
sigma = +1 the double numbers; those are the scalars of the elliptic,
parabolic and hyperbolic planes respectively.  Arithmetic is closed-form,
division goes through the sigma-conjugate and refuses zero divisors.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import ZeroDivisor

# absolute margin for the invertibility tests below
EPS_DIV = 1e-12


class GeometryKind(enum.IntEnum):
    """Which square the imaginary unit has."""

    ELLIPTIC = -1
    PARABOLIC = 0
    HYPERBOLIC = 1

    @property
    def sigma(self) -> int:
        return int(self)

    @classmethod
    def parse(cls, text: str) -> "GeometryKind":
        t = text.strip().lower()
        for k in cls:
            if t in (k.name.lower(), str(k.value)):
                return k
        raise ValueError(f"unknown geometry {text!r}")


@dataclass(frozen=True)
class HNumber:
    """One number a + i*b in the plane selected by ``kind``."""

    re: float
    im: float
    kind: GeometryKind

    def __post_init__(self) -> None:
        if not (math.isfinite(self.re) and math.isfinite(self.im)):
            raise ValueError("components must be finite")

    def _same(self, other: "HNumber") -> None:
        if not isinstance(other, HNumber):
            raise TypeError(f"expected HNumber, got {type(other).__name__}")
        if other.kind != self.kind:
            raise ValueError(f"kind mismatch: {self.kind.name} vs {other.kind.name}")

    def __add__(self, other: "HNumber") -> "HNumber":
        self._same(other)
        return HNumber(self.re + other.re, self.im + other.im, self.kind)

    def __sub__(self, other: "HNumber") -> "HNumber":
        self._same(other)
        return HNumber(self.re - other.re, self.im - other.im, self.kind)

    def __neg__(self) -> "HNumber":
        return HNumber(-self.re, -self.im, self.kind)

    def __mul__(self, other: "HNumber") -> "HNumber":
        self._same(other)
        s = self.kind.sigma
        return HNumber(
            self.re * other.re + s * self.im * other.im,
            self.re * other.im + self.im * other.re,
            self.kind,
        )

    def __truediv__(self, other: "HNumber") -> "HNumber":
        self._same(other)
        if not other.invertible():
            raise ZeroDivisor(f"{other} is not invertible")
        # b * conj(b) = re^2 - sigma * im^2, a real number
        num = self * other.conjugate()
        den = other.re * other.re - other.kind.sigma * other.im * other.im
        return HNumber(num.re / den, num.im / den, self.kind)

    def conjugate(self) -> "HNumber":
        return HNumber(self.re, -self.im, self.kind)

    def invertible(self, eps: float = EPS_DIV) -> bool:
        s = self.kind.sigma
        if s == -1:
            return math.hypot(self.re, self.im) > eps
        if s == 0:
            return abs(self.re) > eps
        return abs(abs(self.re) - abs(self.im)) > eps

    def modulus_sq(self) -> float:
        """Signed square modulus re^2 - sigma * im^2."""
        return self.re * self.re - self.kind.sigma * self.im * self.im

    def scaled(self, factor: float) -> "HNumber":
        return HNumber(self.re * factor, self.im * factor, self.kind)

    def is_close(self, other: "HNumber", tol: float = 1e-9) -> bool:
        self._same(other)
        return abs(self.re - other.re) <= tol and abs(self.im - other.im) <= tol

    def __repr__(self) -> str:
        unit = {-1: "i", 0: "eps", 1: "j"}[self.kind.sigma]
        sign = "+" if self.im >= 0 else "-"
        return f"({self.re:g} {sign} {abs(self.im):g}{unit})"


def point(u: float, v: float, kind: GeometryKind) -> HNumber:
    """Plane point with coordinates (u, v)."""
    return HNumber(float(u), float(v), kind)


def imaginary_unit(kind: GeometryKind) -> HNumber:
    return HNumber(0.0, 1.0, kind)


def modulus_sq(z: HNumber) -> float:
    return z.modulus_sq()

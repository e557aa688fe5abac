"""Domain errors shared across the package.

Everything raised on bad geometry input derives from GeometryError so the
CLI and service can map the whole family to one exit code / HTTP status.
Programming errors (wrong types, mismatched kinds) stay ValueError/TypeError.
"""


class GeometryError(Exception):
    """Base class for recoverable domain errors."""


class ZeroDivisor(GeometryError):
    """Division by a non-invertible number (zero, or on the light cone)."""


class PointAtInfinity(GeometryError):
    """A Moebius image escaped to infinity (vanishing denominator)."""


class NotInUpperHalfPlane(GeometryError):
    """Operation requires Im > 0."""


class ImaginaryLength(GeometryError):
    """Length integrand went negative for a space-like curve."""


class InsufficientSamples(GeometryError):
    """Not enough curve samples around the requested parameter."""


class PoleOnSegment(GeometryError):
    """Closed-form segment integral has a pole inside the interval."""


class DegenerateCycle(GeometryError):
    """Cycle coefficients do not describe a usable curve."""


class NoRealSolution(GeometryError):
    """No real geodesic exists through the requested pair."""


class DomainExceeded(GeometryError):
    """Inverse-sine argument left [-1, 1]."""


class OutsideDisk(GeometryError):
    """Point outside the unit disk of its flavor."""


class NonMonotoneSamples(GeometryError):
    """Relabel samples are not monotone in the invariant."""


class VerticalPair(GeometryError):
    """Pair shares a real part where a finite slope was requested."""


class StepTooLarge(GeometryError):
    """Integrator local error estimate exceeded its budget."""


class DegenerateFit(GeometryError):
    """Too few usable samples to fit a family parameter."""


class PointsNotOnCycle(GeometryError):
    """Triple points do not satisfy the cycle equation."""


class UnsupportedGeometry(GeometryError):
    """Operation is not defined for this geometry kind."""


class SceneFormatError(GeometryError):
    """Scene file could not be parsed."""

"""Arithmetic of the three hypercomplex planes (i^2 = -1, 0, +1)."""

import math

import pytest
from hypothesis import given, strategies as st

from ephgeo import GeometryKind, HNumber, ZeroDivisor, imaginary_unit, modulus_sq, point

KINDS = list(GeometryKind)

finite = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False, allow_infinity=False)


def _num(kind):
    return st.builds(lambda a, b: HNumber(a, b, kind), finite, finite)


def _scale(*zs) -> float:
    return max([1.0] + [abs(z.re) + abs(z.im) for z in zs])


def test_imaginary_unit_squares_to_sigma():
    for kind in KINDS:
        i = imaginary_unit(kind)
        sq = i * i
        assert sq.re == kind.sigma
        assert sq.im == 0.0


def test_point_and_attributes():
    z = point(2.0, 3.0, GeometryKind.HYPERBOLIC)
    assert (z.re, z.im) == (2.0, 3.0)
    assert z.kind is GeometryKind.HYPERBOLIC
    assert modulus_sq(z) == 4.0 - 9.0


def test_modulus_sq_per_kind():
    assert point(3, 4, GeometryKind.ELLIPTIC).modulus_sq() == 25.0
    assert point(3, 4, GeometryKind.PARABOLIC).modulus_sq() == 9.0
    assert point(3, 4, GeometryKind.HYPERBOLIC).modulus_sq() == -7.0


def test_kind_mixing_is_rejected():
    a = point(1, 1, GeometryKind.ELLIPTIC)
    b = point(1, 1, GeometryKind.PARABOLIC)
    with pytest.raises((TypeError, ValueError)):
        a + b


@pytest.mark.parametrize("kind", KINDS)
def test_known_products(kind):
    # (1 + i)(1 - i) = 1 - i^2 = 1 - sigma
    z = HNumber(1.0, 1.0, kind)
    prod = z * z.conjugate()
    assert prod.re == 1.0 - kind.sigma
    assert prod.im == 0.0


def test_dual_division_example():
    # (1 + eps) / (2 + eps) = (1 + eps)(2 - eps)/4 = (2 + eps)/4
    num = HNumber(1.0, 1.0, GeometryKind.PARABOLIC)
    den = HNumber(2.0, 1.0, GeometryKind.PARABOLIC)
    q = num / den
    assert math.isclose(q.re, 0.5, rel_tol=0, abs_tol=1e-15)
    assert math.isclose(q.im, 0.25, rel_tol=0, abs_tol=1e-15)


def test_double_division_on_light_cone_fails():
    z = HNumber(1.0, 1.0, GeometryKind.HYPERBOLIC)
    assert not z.invertible()
    with pytest.raises(ZeroDivisor):
        z / z


def test_double_division_off_light_cone():
    z = HNumber(2.0, 1.0, GeometryKind.HYPERBOLIC)
    q = z / z
    assert q.is_close(HNumber(1.0, 0.0, GeometryKind.HYPERBOLIC), 1e-15)


@pytest.mark.parametrize("kind", KINDS)
def test_repr_mentions_unit(kind):
    text = repr(HNumber(1.0, 2.0, kind))
    unit = {-1: "i", 0: "eps", 1: "j"}[kind.sigma]
    assert unit in text


@given(a=_num(GeometryKind.ELLIPTIC), b=_num(GeometryKind.ELLIPTIC), c=_num(GeometryKind.ELLIPTIC))
def test_elliptic_ring_axioms(a, b, c):
    s = _scale(a, b, c)
    lhs = a * (b + c)
    rhs = a * b + a * c
    assert abs(lhs.re - rhs.re) <= 1e-9 * s * s
    assert abs(lhs.im - rhs.im) <= 1e-9 * s * s
    ab, ba = a * b, b * a
    assert abs(ab.re - ba.re) <= 1e-9 * s * s
    assert abs(ab.im - ba.im) <= 1e-9 * s * s


@pytest.mark.parametrize("kind", KINDS)
@given(data=st.data())
def test_multiplication_respects_modulus(kind, data):
    a = data.draw(_num(kind))
    b = data.draw(_num(kind))
    s = _scale(a, b)
    lhs = (a * b).modulus_sq()
    rhs = a.modulus_sq() * b.modulus_sq()
    assert abs(lhs - rhs) <= 1e-8 * s**4


@pytest.mark.parametrize("kind", KINDS)
@given(data=st.data())
def test_division_round_trip(kind, data):
    a = data.draw(_num(kind))
    b = data.draw(_num(kind))
    # stay clear of the non-invertible locus of each plane
    if kind is GeometryKind.ELLIPTIC and math.hypot(b.re, b.im) < 1e-3:
        return
    if kind is GeometryKind.PARABOLIC and abs(b.re) < 1e-3:
        return
    if kind is GeometryKind.HYPERBOLIC and abs(abs(b.re) - abs(b.im)) < 1e-3 * _scale(b):
        return
    back = (a / b) * b
    tol = 1e-6 * _scale(a, b) ** 2 / max(abs(b.modulus_sq()), 1e-6)
    assert abs(back.re - a.re) <= tol
    assert abs(back.im - a.im) <= tol


def test_conjugate_involution_and_sum():
    for kind in KINDS:
        z = HNumber(1.5, -2.5, kind)
        assert z.conjugate().conjugate() == z
        s = z + z.conjugate()
        assert s.re == 3.0 and s.im == 0.0


def test_non_finite_rejected():
    with pytest.raises(ValueError):
        HNumber(math.nan, 0.0, GeometryKind.ELLIPTIC)
    with pytest.raises(ValueError):
        HNumber(0.0, math.inf, GeometryKind.PARABOLIC)

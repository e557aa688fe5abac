"""Invariant metric, curve lengths, extremal equations, closed-form integrals."""

import math

import numpy as np
import pytest
from scipy.integrate import quad

from ephgeo import (
    GeometryKind,
    ImaginaryLength,
    InsufficientSamples,
    NotInUpperHalfPlane,
    PoleOnSegment,
    PolyCurve,
    apply,
    concatenate,
    curve_length,
    el_residual,
    elliptic_arc,
    metric_at,
    parabola_segment_length,
    point,
    random_det_one,
)


def test_metric_coefficients_at_height_two():
    for kind, g_vv in ((GeometryKind.ELLIPTIC, 0.25), (GeometryKind.PARABOLIC, 0.0), (GeometryKind.HYPERBOLIC, -0.25)):
        form = metric_at((1.0, 2.0), kind)
        assert form.E == 0.25
        assert form.F == 0.0
        assert form.G == g_vv


def test_metric_undefined_on_boundary():
    with pytest.raises(NotInUpperHalfPlane):
        metric_at((0.0, 0.0), GeometryKind.ELLIPTIC)


def _vertical(kind, v0=1.0, v1=2.0, n=201):
    ts = np.linspace(0.0, 1.0, n)
    return PolyCurve(ts, np.zeros(n), v0 * (v1 / v0) ** ts, kind)


def test_vertical_segment_length_is_log_ratio():
    # integral of dv/v from 1 to 2
    assert math.isclose(curve_length(_vertical(GeometryKind.ELLIPTIC)), math.log(2), rel_tol=1e-10)
    assert math.isclose(
        curve_length(_vertical(GeometryKind.HYPERBOLIC), timelike=True), math.log(2), rel_tol=1e-10
    )


def test_vertical_segment_has_zero_degenerate_length():
    # sigma = 0 metric weighs du only
    assert curve_length(_vertical(GeometryKind.PARABOLIC)) <= 1e-12


def test_vertical_spacelike_length_is_imaginary():
    with pytest.raises(ImaginaryLength):
        curve_length(_vertical(GeometryKind.HYPERBOLIC))


def test_timelike_flag_needs_hyperbolic_plane():
    with pytest.raises(ValueError):
        curve_length(_vertical(GeometryKind.ELLIPTIC), timelike=True)


def test_horizontal_segment_length():
    ts = np.linspace(0.0, 1.0, 101)
    for kind in GeometryKind:
        c = PolyCurve(ts, 3.0 * ts, np.ones_like(ts), kind)
        assert math.isclose(curve_length(c), 3.0, rel_tol=1e-10)


def test_two_sample_vertical_fallback():
    c = PolyCurve(np.array([0.0, 1.0]), np.array([0.0, 0.0]), np.array([1.0, 2.0]), GeometryKind.HYPERBOLIC)
    assert math.isclose(curve_length(c, timelike=True), math.log(2), rel_tol=1e-9)


def test_elliptic_length_invariant_under_maps():
    rng = np.random.default_rng(17)
    z = point(-0.5, 1.0, GeometryKind.ELLIPTIC)
    w = point(1.5, 2.0, GeometryKind.ELLIPTIC)
    base = curve_length(elliptic_arc(z, w))
    for _ in range(5):
        g = random_det_one(rng)
        arc = elliptic_arc(apply(g, z), apply(g, w))
        assert math.isclose(curve_length(arc), base, rel_tol=1e-7)


def test_length_adds_under_concatenation():
    z = point(0.0, 1.0, GeometryKind.ELLIPTIC)
    m = point(0.0, 2.0, GeometryKind.ELLIPTIC)
    w = point(0.0, 4.0, GeometryKind.ELLIPTIC)
    joined = concatenate(elliptic_arc(z, m), elliptic_arc(m, w))
    assert math.isclose(curve_length(joined), math.log(4), rel_tol=1e-7)


def test_concatenate_rejects_mismatched_endpoints():
    a = elliptic_arc(point(0.0, 1.0, GeometryKind.ELLIPTIC), point(0.0, 2.0, GeometryKind.ELLIPTIC))
    b = elliptic_arc(point(1.0, 1.0, GeometryKind.ELLIPTIC), point(1.0, 2.0, GeometryKind.ELLIPTIC))
    with pytest.raises(ValueError):
        concatenate(a, b)


def test_unit_speed_semicircle_satisfies_extremal_equations():
    # u = tanh T, v = sech T is the unit semicircle at unit speed
    Ts = np.linspace(-1.5, 1.5, 3001)
    c = PolyCurve(Ts, np.tanh(Ts), 1.0 / np.cosh(Ts), GeometryKind.ELLIPTIC)
    for T in (-0.8, 0.0, 0.6):
        r1, r2 = el_residual(c, T)
        assert abs(r1) <= 1e-5
        assert abs(r2) <= 1e-5


def test_vertical_exponential_satisfies_extremal_equations():
    Ts = np.linspace(0.0, 1.0, 2001)
    for kind in GeometryKind:
        c = PolyCurve(Ts, np.zeros_like(Ts), np.exp(Ts), kind)
        for T in (0.25, 0.5, 0.75):
            r1, r2 = el_residual(c, T)
            assert abs(r1) <= 1e-8
            assert abs(r2) <= 1e-8


def test_el_residual_needs_interior_samples():
    Ts = np.linspace(0.0, 1.0, 9)
    c = PolyCurve(Ts, Ts, np.ones_like(Ts), GeometryKind.ELLIPTIC)
    with pytest.raises(InsufficientSamples):
        el_residual(c, 0.0)  # nearest sample is the first one
    short = PolyCurve(Ts[:4], Ts[:4], np.ones(4), GeometryKind.ELLIPTIC)
    with pytest.raises(InsufficientSamples):
        el_residual(short, 0.2)


def test_segment_integral_quarter_circle_value():
    # dt/(t^2/4 + 1) over [0, 2] = 2 atan(1) = pi/2
    assert math.isclose(parabola_segment_length(0.25, 0.0, 1.0, 0.0, 2.0), math.pi / 2, rel_tol=0, abs_tol=1e-12)


def test_segment_integral_log_branch_value():
    # dt/(1 - t^2/4) over [0, 1] = ln 3
    assert math.isclose(parabola_segment_length(-0.25, 0.0, 1.0, 0.0, 1.0), math.log(3), rel_tol=0, abs_tol=1e-12)


def test_segment_integral_double_root_branch():
    # a=1, b=-2, c=1 has the double root t=1; on [0, 1/2] the antiderivative is -2/(2t-2)
    assert math.isclose(parabola_segment_length(1.0, -2.0, 1.0, 0.0, 0.5), 1.0, rel_tol=0, abs_tol=1e-12)


def test_segment_integral_linear_and_constant_weights():
    assert math.isclose(parabola_segment_length(0.0, 0.0, 2.0, 0.0, 3.0), 1.5, rel_tol=0, abs_tol=1e-12)
    # dt/(2t + 1) over [0, 1] = ln(3)/2
    assert math.isclose(parabola_segment_length(0.0, 2.0, 1.0, 0.0, 1.0), math.log(3) / 2, rel_tol=0, abs_tol=1e-12)


def test_segment_integral_matches_quadrature():
    # oracle: adaptive quadrature over pole-free quadratics
    rng = np.random.default_rng(23)
    for _ in range(25):
        a = float(rng.uniform(-2, 2))
        b = float(rng.uniform(-2, 2))
        # force a positive quadratic on [0, 1] by lifting c above the minimum
        tmin = min(max(-b / (2 * a), 0.0), 1.0) if abs(a) > 1e-9 else 0.0
        floor = min(a * t * t + b * t for t in (0.0, tmin, 1.0))
        c = float(rng.uniform(0.5, 2.0)) - floor
        got = parabola_segment_length(a, b, c, 0.0, 1.0)
        want, err = quad(lambda t: 1.0 / (a * t * t + b * t + c), 0.0, 1.0)
        assert math.isclose(got, want, rel_tol=0, abs_tol=max(1e-9, 10 * err))


def test_segment_integral_pole_raises():
    with pytest.raises(PoleOnSegment):
        parabola_segment_length(1.0, 0.0, -0.25, 0.0, 1.0)  # roots at +-1/2
    with pytest.raises(PoleOnSegment):
        parabola_segment_length(0.0, 1.0, -0.25, 0.0, 1.0)  # linear root at 1/4


def test_segment_integral_argument_order():
    with pytest.raises(ValueError):
        parabola_segment_length(0.25, 0.0, 1.0, 2.0, 0.0)
    assert parabola_segment_length(0.25, 0.0, 1.0, 1.0, 1.0) == 0.0

"""Invariant ratio, core distances, relabels, and the disk models."""

import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from ephgeo import (
    DistanceSpec,
    DomainExceeded,
    GeometryKind,
    IntervalType,
    NonMonotoneSamples,
    NotInUpperHalfPlane,
    OutsideDisk,
    ParabolicFlavor,
    Relabel,
    apply,
    cayley,
    cayley_inverse,
    core_distance,
    disk_distance,
    distance,
    fit_relabel,
    interval_type,
    invariant_ratio,
    inverse_sine,
    point,
    random_det_one,
)

FLAVORS = list(ParabolicFlavor)


def _spec(geometry, flavor=ParabolicFlavor.PP, label=None):
    return DistanceSpec(geometry, flavor, label or Relabel.identity())


def test_invariant_ratio_worked_value():
    z = point(0.0, 1.0, GeometryKind.PARABOLIC)
    w = point(2.0, 1.0, GeometryKind.PARABOLIC)
    assert invariant_ratio(z, w) == 2.0
    with pytest.raises(NotInUpperHalfPlane):
        invariant_ratio(z, point(2.0, -1.0, GeometryKind.PARABOLIC))


def test_core_distance_worked_pair_by_flavor():
    # same pair, the three inverse sines: asinh(1), 2, asin(1)
    expected = {
        ParabolicFlavor.PE: math.asinh(1.0),
        ParabolicFlavor.PP: 2.0,
        ParabolicFlavor.PH: math.pi / 2,
    }
    z = point(0.0, 1.0, GeometryKind.PARABOLIC)
    w = point(2.0, 1.0, GeometryKind.PARABOLIC)
    for flavor, want in expected.items():
        d, itype = core_distance(_spec(GeometryKind.PARABOLIC, flavor), z, w)
        assert math.isclose(d, want, rel_tol=0, abs_tol=1e-15)
        assert itype is IntervalType.SPACELIKE


def test_vertical_pair_is_degenerate_in_dual_plane():
    z = point(0.0, 1.0, GeometryKind.PARABOLIC)
    w = point(0.0, 2.0, GeometryKind.PARABOLIC)
    d, _ = core_distance(_spec(GeometryKind.PARABOLIC), z, w)
    assert d == 0.0


def test_elliptic_vertical_pair_log_values():
    spec = _spec(GeometryKind.ELLIPTIC)
    z = point(0.0, 1.0, GeometryKind.ELLIPTIC)
    # asinh(1 / (2 sqrt 2)) = ln(2) / 2 and asinh(3/4) = ln 2, both exact
    d, _ = core_distance(spec, z, point(0.0, 2.0, GeometryKind.ELLIPTIC))
    assert math.isclose(d, math.log(2.0) / 2.0, rel_tol=1e-14)
    d, _ = core_distance(spec, z, point(0.0, 4.0, GeometryKind.ELLIPTIC))
    assert math.isclose(d, math.log(2.0), rel_tol=1e-14)
    # the doubled label gives the conventional normalization ln 4
    doubled = _spec(GeometryKind.ELLIPTIC, label=Relabel.double())
    d, _ = distance(doubled, z, point(0.0, 4.0, GeometryKind.ELLIPTIC))
    assert math.isclose(d, math.log(4.0), rel_tol=1e-14)


def test_ph_flavor_domain_is_bounded():
    z = point(0.0, 1.0, GeometryKind.PARABOLIC)
    w = point(4.0, 1.0, GeometryKind.PARABOLIC)
    with pytest.raises(DomainExceeded):
        core_distance(_spec(GeometryKind.PARABOLIC, ParabolicFlavor.PH), z, w)


def test_hyperbolic_branches_by_interval_type():
    spec = _spec(GeometryKind.HYPERBOLIC)
    z = point(0.0, 1.0, GeometryKind.HYPERBOLIC)
    d, itype = core_distance(spec, z, point(2.0, 1.0, GeometryKind.HYPERBOLIC))
    assert itype is IntervalType.SPACELIKE
    assert math.isclose(d, math.pi / 2, rel_tol=1e-14)
    d, itype = core_distance(spec, z, point(0.0, 3.0, GeometryKind.HYPERBOLIC))
    assert itype is IntervalType.TIMELIKE
    assert math.isclose(d, math.log(3.0) / 2.0, rel_tol=1e-14)  # asinh(1/sqrt 3)
    d, itype = core_distance(spec, z, point(1.0, 2.0, GeometryKind.HYPERBOLIC))
    assert itype is IntervalType.LIGHTLIKE
    assert d == 0.0


def test_interval_type_ignores_geometry_sign():
    z = point(0.0, 1.0, GeometryKind.ELLIPTIC)
    assert interval_type(z, point(3.0, 2.0, GeometryKind.ELLIPTIC)) is IntervalType.SPACELIKE
    assert interval_type(z, point(0.5, 2.0, GeometryKind.ELLIPTIC)) is IntervalType.TIMELIKE


def test_point_kind_must_match_spec():
    z = point(0.0, 1.0, GeometryKind.ELLIPTIC)
    with pytest.raises(ValueError):
        core_distance(_spec(GeometryKind.PARABOLIC), z, z)


def test_distance_is_symmetric_and_zero_on_diagonal():
    rng = np.random.default_rng(7)
    for kind in GeometryKind:
        spec = _spec(kind)
        for _ in range(20):
            z = point(rng.uniform(-3, 3), rng.uniform(0.2, 3), kind)
            w = point(rng.uniform(-3, 3), rng.uniform(0.2, 3), kind)
            try:
                d1, _ = core_distance(spec, z, w)
                d2, _ = core_distance(spec, w, z)
            except DomainExceeded:
                continue
            assert math.isclose(d1, d2, rel_tol=0, abs_tol=1e-14)
        zz = point(0.4, 1.3, kind)
        assert core_distance(spec, zz, zz)[0] == 0.0


def test_elliptic_distance_is_moebius_invariant():
    rng = np.random.default_rng(19)
    spec = _spec(GeometryKind.ELLIPTIC)
    z = point(-0.7, 0.8, GeometryKind.ELLIPTIC)
    w = point(1.2, 2.1, GeometryKind.ELLIPTIC)
    base, _ = core_distance(spec, z, w)
    for _ in range(25):
        g = random_det_one(rng)
        moved, _ = core_distance(spec, apply(g, z), apply(g, w))
        assert math.isclose(moved, base, rel_tol=0, abs_tol=1e-9)


def test_inverse_sine_flavors():
    assert inverse_sine(ParabolicFlavor.PE, 0.75) == math.asinh(0.75)
    assert inverse_sine(ParabolicFlavor.PP, 0.75) == 1.5
    assert inverse_sine(ParabolicFlavor.PH, 0.75) == math.asin(0.75)
    with pytest.raises(DomainExceeded):
        inverse_sine(ParabolicFlavor.PH, 1.001)


def test_relabel_parse_and_validation():
    assert Relabel.parse("identity")(0.3) == 0.3
    assert Relabel.parse("double")(0.3) == 0.6
    assert Relabel.parse("scale:2.5")(2.0) == 5.0
    assert Relabel.parse("sinhinv")(1.0) == math.asinh(1.0)
    assert Relabel.parse("sininv")(0.5) == math.asin(0.5)
    with pytest.raises(ValueError):
        Relabel.parse("cube")
    with pytest.raises(ValueError):
        Relabel.scale(-1.0)


def test_spec_rejects_bad_labels():
    with pytest.raises(NonMonotoneSamples):
        _spec(GeometryKind.ELLIPTIC, label=Relabel("offset", lambda t: t + 1.0))
    with pytest.raises(NonMonotoneSamples):
        _spec(GeometryKind.ELLIPTIC, label=Relabel("dec", lambda t: -t))


def test_relabel_from_table():
    table = Relabel.from_table([0.0, 1.0, 2.0], [0.0, 0.5, 2.0])
    assert table(1.5) == 1.25
    with pytest.raises(NonMonotoneSamples):
        Relabel.from_table([0.0, 0.0, 1.0], [0.0, 0.1, 0.2])
    with pytest.raises(NonMonotoneSamples):
        Relabel.from_table([0.0, 1.0, 2.0], [0.0, 0.5, 0.1])


def test_relabelled_distance_composes():
    spec = _spec(GeometryKind.PARABOLIC, label=Relabel.sinh_inv())
    z = point(0.0, 1.0, GeometryKind.PARABOLIC)
    w = point(2.0, 1.0, GeometryKind.PARABOLIC)
    d, _ = distance(spec, z, w)
    assert math.isclose(d, math.asinh(2.0), rel_tol=1e-14)


def test_fit_relabel_recovers_scaling():
    spec = _spec(GeometryKind.ELLIPTIC, label=Relabel.scale(2.5))
    rng = np.random.default_rng(31)
    samples = []
    for _ in range(200):
        z = point(rng.uniform(-2, 2), rng.uniform(0.3, 2.5), GeometryKind.ELLIPTIC)
        w = point(rng.uniform(-2, 2), rng.uniform(0.3, 2.5), GeometryKind.ELLIPTIC)
        samples.append((invariant_ratio(z, w), distance(spec, z, w)[0]))
    fit = fit_relabel(samples)
    assert fit.residual <= 1e-12
    assert fit.strictly_increasing
    # interpolated fit matches the true composite away from the knots
    for F in (0.5, 1.0, 2.0):
        assert math.isclose(fit(F), 2.5 * math.asinh(F / 2.0), rel_tol=0, abs_tol=2e-3)


def test_fit_relabel_rejects_bad_samples():
    with pytest.raises(NonMonotoneSamples):
        fit_relabel([(0.0, 0.0)] * 12)
    with pytest.raises(NonMonotoneSamples):
        fit_relabel([(float(i), float(-i)) for i in range(12)])


def test_cayley_of_imaginary_unit_for_every_flavor():
    w = point(0.0, 1.0, GeometryKind.PARABOLIC)
    for flavor in FLAVORS:
        img = cayley(w, flavor)
        assert (img.re, img.im) == (0.0, 0.5)


def test_cayley_sends_origin_to_boundary():
    for flavor in FLAVORS:
        img = cayley(point(0.0, 0.0, GeometryKind.PARABOLIC), flavor)
        assert (img.re, img.im) == (0.0, -0.5)
        # boundary of the flavored disk: 1 + 2v + sb u^2 = 0
        assert abs(1.0 + 2.0 * img.im + int(flavor) * img.re**2) <= 1e-15


def test_cayley_worked_value_pe():
    img = cayley(point(0.3, 0.7, GeometryKind.PARABOLIC), ParabolicFlavor.PE)
    assert math.isclose(img.re, 0.3, rel_tol=0, abs_tol=1e-15)
    assert math.isclose(img.im, 0.245, rel_tol=0, abs_tol=1e-15)


def test_cayley_requires_dual_plane():
    with pytest.raises(ValueError):
        cayley(point(0.0, 1.0, GeometryKind.ELLIPTIC), ParabolicFlavor.PP)


@given(
    st.sampled_from(FLAVORS),
    st.floats(-2.0, 2.0),
    st.floats(0.05, 3.0),
)
def test_cayley_roundtrip(flavor, u, v):
    w = point(u, v, GeometryKind.PARABOLIC)
    back = cayley_inverse(cayley(w, flavor), flavor)
    assert abs(back.re - u) <= 1e-12
    assert abs(back.im - v) <= 1e-12


def test_disk_distance_matches_half_plane_core():
    rng = np.random.default_rng(43)
    for flavor in FLAVORS:
        spec = _spec(GeometryKind.PARABOLIC, flavor)
        for _ in range(50):
            z = point(rng.uniform(-1, 1), rng.uniform(0.3, 2), GeometryKind.PARABOLIC)
            w = point(rng.uniform(-1, 1), rng.uniform(0.3, 2), GeometryKind.PARABOLIC)
            try:
                want, _ = core_distance(spec, z, w)
            except DomainExceeded:
                continue
            got = disk_distance(flavor, cayley(z, flavor), cayley(w, flavor))
            assert math.isclose(got, want, rel_tol=0, abs_tol=1e-12)


def test_disk_distance_rejects_outside_points():
    with pytest.raises(OutsideDisk):
        disk_distance(ParabolicFlavor.PE, (3.0, 0.1), (0.0, 0.0))
    with pytest.raises(OutsideDisk):
        disk_distance(ParabolicFlavor.PP, (0.0, -0.5), (0.0, 0.0))

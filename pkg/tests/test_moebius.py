"""Determinant-one fractional-linear maps and the i-stabilizing subgroups."""

import math

import numpy as np
import pytest

from ephgeo import (
    GeometryKind,
    MoebiusMap,
    PointAtInfinity,
    SubgroupKind,
    apply,
    default_subgroup,
    fixes_i,
    imaginary_unit,
    invariant_ratio,
    jacobian_at_i,
    map_point_to_i,
    orbit_points,
    point,
    random_det_one,
    subgroup_element,
)


def test_determinant_is_validated():
    with pytest.raises(ValueError):
        MoebiusMap(2.0, 0.0, 0.0, 1.0)
    MoebiusMap(2.0, 0.0, 0.0, 0.5)  # det = 1, fine


def test_subgroup_element_forms():
    th = 0.3
    k = subgroup_element(SubgroupKind.K, th)
    assert np.allclose(k.matrix(), [[math.cos(th), -math.sin(th)], [math.sin(th), math.cos(th)]])
    n = subgroup_element(SubgroupKind.NPRIME, 2.0)
    assert np.allclose(n.matrix(), [[1, 0], [2, 1]])
    a = subgroup_element(SubgroupKind.APRIME, 0.5)
    assert np.allclose(a.matrix(), [[math.cosh(0.5), math.sinh(0.5)], [math.sinh(0.5), math.cosh(0.5)]])


def test_compose_is_matrix_product_and_angles_add():
    g = subgroup_element(SubgroupKind.K, 0.2)
    h = subgroup_element(SubgroupKind.K, 0.5)
    gh = g.compose(h)
    assert np.allclose(gh.matrix(), subgroup_element(SubgroupKind.K, 0.7).matrix())


def test_inverse_composes_to_identity():
    rng = np.random.default_rng(3)
    for _ in range(20):
        g = random_det_one(rng)
        gi = g.compose(g.inverse())
        assert np.allclose(gi.matrix(), np.eye(2), atol=1e-12)


def test_random_det_one_has_unit_determinant():
    rng = np.random.default_rng(11)
    for _ in range(50):
        m = random_det_one(rng).matrix()
        assert math.isclose(float(np.linalg.det(m)), 1.0, rel_tol=0, abs_tol=1e-9)


@pytest.mark.parametrize(
    "kind,subgroup",
    [
        (GeometryKind.ELLIPTIC, SubgroupKind.K),
        (GeometryKind.PARABOLIC, SubgroupKind.NPRIME),
        (GeometryKind.HYPERBOLIC, SubgroupKind.APRIME),
    ],
)
def test_matching_subgroup_fixes_i(kind, subgroup):
    assert default_subgroup(kind) is subgroup
    for param in (-1.0, -0.3, 0.0, 0.4, 1.1):
        assert fixes_i(subgroup_element(subgroup, param), kind)


def test_shear_moves_dual_point_to_known_image():
    # w = 1 + eps under [[1,0],[1,1]]: u' = u/(u+1)^2 evaluated as 1/2, v' = 1/4
    g = subgroup_element(SubgroupKind.NPRIME, 1.0)
    w = point(1.0, 1.0, GeometryKind.PARABOLIC)
    img = apply(g, w)
    assert math.isclose(img.re, 0.5, rel_tol=0, abs_tol=1e-15)
    assert math.isclose(img.im, 0.25, rel_tol=0, abs_tol=1e-15)


def test_shear_pole_raises_point_at_infinity():
    g = subgroup_element(SubgroupKind.NPRIME, -1.0)
    with pytest.raises(PointAtInfinity):
        apply(g, point(1.0, 1.0, GeometryKind.PARABOLIC))


def test_map_point_to_i_lands_on_i():
    for kind in GeometryKind:
        i = imaginary_unit(kind)
        for u, v in ((0.0, 1.0), (2.0, 0.5), (-3.0, 4.0), (0.7, 2.2)):
            w = point(u, v, kind)
            g = map_point_to_i(w)
            assert apply(g, w).is_close(i, 1e-12)


def _numeric_jacobian(g, kind, h=1e-6):
    def f(u, v):
        img = apply(g, point(u, v, kind))
        return np.array([img.re, img.im])

    col_u = (f(h, 1.0) - f(-h, 1.0)) / (2 * h)
    col_v = (f(0.0, 1.0 + h) - f(0.0, 1.0 - h)) / (2 * h)
    return np.column_stack([col_u, col_v])


@pytest.mark.parametrize(
    "kind,subgroup,params",
    [
        (GeometryKind.ELLIPTIC, SubgroupKind.K, (-0.9, -0.2, 0.3, 1.2)),
        (GeometryKind.PARABOLIC, SubgroupKind.NPRIME, (-2.0, -0.5, 0.7, 3.0)),
        (GeometryKind.HYPERBOLIC, SubgroupKind.APRIME, (-1.0, -0.3, 0.4, 0.9)),
    ],
)
def test_jacobian_matches_finite_differences(kind, subgroup, params):
    # oracle: central differences of the actual plane action at i
    for p in params:
        g = subgroup_element(subgroup, p)
        J = jacobian_at_i(subgroup, p)
        J_num = _numeric_jacobian(g, kind)
        assert np.allclose(J, J_num, atol=5e-9)


def test_jacobian_parameters_double():
    # the action at i doubles the subgroup parameter (sense set by the matrix convention)
    th = 0.35
    J = jacobian_at_i(SubgroupKind.K, th)
    c, s = math.cos(2 * th), math.sin(2 * th)
    assert np.allclose(J, [[c, s], [-s, c]])
    assert np.allclose(jacobian_at_i(SubgroupKind.NPRIME, 1.5), [[1, 0], [-3, 1]])


@pytest.mark.parametrize(
    "subgroup,sigma,lim",
    [(SubgroupKind.K, -1, math.pi), (SubgroupKind.NPRIME, 0, 10.0), (SubgroupKind.APRIME, 1, 2.0)],
)
def test_jacobian_preserves_signature_form(subgroup, sigma, lim):
    A = np.diag([1.0, -float(sigma)])
    rng = np.random.default_rng(5)
    for p in rng.uniform(-lim, lim, size=100):
        J = jacobian_at_i(subgroup, float(p))
        assert np.max(np.abs(J.T @ A @ J - A)) <= 1e-12


def test_shear_orbit_preserves_parabolic_level():
    # N' orbits are level sets of u^2 / v
    w0 = point(1.0, 2.0, GeometryKind.PARABOLIC)
    curve = orbit_points(SubgroupKind.NPRIME, w0, np.linspace(-0.4, 3.0, 41))
    levels = curve.u**2 / curve.v
    assert np.allclose(levels, 0.5, atol=1e-12)


def test_rotation_orbit_preserves_elliptic_level():
    i = point(0.0, 1.0, GeometryKind.ELLIPTIC)
    w0 = point(0.0, 2.0, GeometryKind.ELLIPTIC)
    curve = orbit_points(SubgroupKind.K, w0, np.linspace(-1.5, 1.5, 61))
    for u, v in zip(curve.u, curve.v):
        f = invariant_ratio(point(float(u), float(v), GeometryKind.ELLIPTIC), i)
        assert math.isclose(f, invariant_ratio(w0, i), rel_tol=0, abs_tol=1e-12)


def test_boost_orbit_preserves_hyperbolic_level():
    i = point(0.0, 1.0, GeometryKind.HYPERBOLIC)
    w0 = point(0.0, 2.0, GeometryKind.HYPERBOLIC)
    curve = orbit_points(SubgroupKind.APRIME, w0, np.linspace(-0.5, 0.5, 41))
    for u, v in zip(curve.u, curve.v):
        f = invariant_ratio(point(float(u), float(v), GeometryKind.HYPERBOLIC), i)
        assert math.isclose(f, invariant_ratio(w0, i), rel_tol=0, abs_tol=1e-12)


def test_subgroup_parse_aliases():
    assert SubgroupKind.parse("k") is SubgroupKind.K
    assert SubgroupKind.parse("Nprime") is SubgroupKind.NPRIME
    assert SubgroupKind.parse("aprime") is SubgroupKind.APRIME
    with pytest.raises(ValueError):
        SubgroupKind.parse("B")

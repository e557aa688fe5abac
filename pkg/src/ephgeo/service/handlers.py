"""One function per endpoint: pydantic request in, pydantic response out.

The FastAPI routes and the command-line front end both call these, so local
and remote invocations share one code path.  Domain failures raise
GeometryError; malformed requests raise ValueError.
"""

from __future__ import annotations

import math

import numpy as np

from ..curves import PolyCurve
from ..errors import DegenerateCycle
from ..cycles import (
    Cycle,
    FocusNotion,
    ParabolicFlavor,
    QuadraticMode,
    coefficient_tag,
    elliptic_geodesic_through_i,
    geodesics_between,
    hyperbolic_geodesics_through_i,
    parabola_focus,
    parabolic_geodesic,
)
from ..distance import (
    DistanceSpec,
    IntervalType,
    Relabel,
    cayley,
    cayley_inverse,
    core_distance,
)
from ..geodesics import TriangleClass, classify_triangle, triangle_compare
from ..hypercomplex import GeometryKind, point
from ..metric import curve_length
from ..moebius import SubgroupKind, default_subgroup, orbit_points
from ..render import curves_csv, raster_csv, render_scene
from ..scene import parse_scene
from ..verify import run_all, run_suite
from . import schemas as S


def _spec(geometry: str, flavor: str, label: str = "identity") -> DistanceSpec:
    return DistanceSpec(
        GeometryKind.parse(geometry), ParabolicFlavor.parse(flavor), Relabel.parse(label)
    )


def handle_distance(req: S.DistanceRequest) -> S.DistanceResponse:
    spec = _spec(req.geometry, req.flavor, req.label)
    z = point(req.z.u, req.z.v, spec.geometry)
    w = point(req.w.u, req.w.v, spec.geometry)
    core, itype = core_distance(spec, z, w)
    degenerate = ""
    if spec.geometry is GeometryKind.PARABOLIC and z.re == w.re:
        degenerate = "vertical"
    elif spec.geometry is GeometryKind.HYPERBOLIC and itype is IntervalType.LIGHTLIKE:
        degenerate = "lightlike"
    return S.DistanceResponse(
        value=spec.label(core), core=core, interval_type=itype.value, degenerate=degenerate
    )


def _cycle_model(c: Cycle) -> S.CycleModel:
    return S.CycleModel(
        k=c.k, l=c.l, n=c.n, m=c.m,
        mode=c.mode.value, degenerate=c.degenerate, tag=coefficient_tag(c),
    )


def _foci(c: Cycle) -> list:
    if c.mode is not QuadraticMode.PARABOLA:
        return []
    out = []
    for notion in FocusNotion:
        try:
            u, v = parabola_focus(c, notion)
        except DegenerateCycle:
            return []
        out.append(S.FocusModel(notion=notion.value, u=u, v=v, on_axis=abs(v) <= 1e-9))
    return out


def handle_geodesic(req: S.GeodesicRequest) -> S.GeodesicResponse:
    geometry = GeometryKind.parse(req.geometry)
    flavor = ParabolicFlavor.parse(req.flavor)
    has_pair = req.w1 is not None and req.w2 is not None
    if (req.t is None) == (not has_pair):
        raise ValueError("give either t (through i) or both w1 and w2")
    if req.t is not None:
        if geometry is GeometryKind.ELLIPTIC:
            cycles = [elliptic_geodesic_through_i(req.t)]
        elif geometry is GeometryKind.PARABOLIC:
            cycles = [parabolic_geodesic(flavor, req.t)]
        else:
            spacelike, timelike = hyperbolic_geodesics_through_i(req.t)
            if req.branch == "spacelike":
                cycles = [spacelike]
            elif req.branch == "timelike":
                cycles = [timelike]
            elif req.branch == "both":
                cycles = [spacelike, timelike]
            else:
                raise ValueError("branch must be spacelike | timelike | both")
    else:
        if geometry is not GeometryKind.PARABOLIC:
            raise ValueError("through-pair geodesics are solved in the parabolic plane")
        w1 = point(req.w1.u, req.w1.v, geometry)
        w2 = point(req.w2.u, req.w2.v, geometry)
        cycles = geodesics_between(w1, w2, flavor)
    foci = []
    for c in cycles:
        foci.extend(_foci(c))
    return S.GeodesicResponse(cycles=[_cycle_model(c) for c in cycles], foci=foci)


def handle_orbit(req: S.OrbitRequest) -> S.OrbitResponse:
    geometry = GeometryKind.parse(req.geometry)
    kind = SubgroupKind.parse(req.subgroup) if req.subgroup else default_subgroup(geometry)
    if not (req.stop > req.start and req.count >= 2):
        raise ValueError("orbit needs stop > start and count >= 2")
    w0 = point(req.center.u, req.center.v, geometry)
    curve = orbit_points(kind, w0, np.linspace(req.start, req.stop, req.count))
    return S.OrbitResponse(
        subgroup=kind.value, ts=list(curve.t), us=list(curve.u), vs=list(curve.v)
    )


def handle_classify(req: S.ClassifyRequest) -> S.ClassifyResponse:
    spec = _spec("parabolic", req.flavor, req.label)
    w1 = point(req.w1.u, req.w1.v, spec.geometry)
    w2 = point(req.w2.u, req.w2.v, spec.geometry)
    z = point(req.z.u, req.z.v, spec.geometry)
    cls = classify_triangle(spec, w1, w2, z, branch=req.branch)
    diff = None
    if cls is not TriangleClass.DEGENERATE:
        d = triangle_compare(spec, w1, w2, z)[0]
        diff = None if math.isnan(d) else d
    return S.ClassifyResponse(triangle_class=cls.value, diff=diff)


def handle_cayley(req: S.CayleyRequest) -> S.CayleyResponse:
    flavor = ParabolicFlavor.parse(req.flavor)
    w = point(req.point.u, req.point.v, GeometryKind.PARABOLIC)
    image = cayley_inverse(w, flavor) if req.inverse else cayley(w, flavor)
    disk_side = w if req.inverse else image
    radicand = 1.0 + 2.0 * disk_side.im + int(flavor) * disk_side.re * disk_side.re
    return S.CayleyResponse(u=image.re, v=image.im, in_disk=radicand > 0.0)


def handle_length(req: S.LengthRequest) -> S.LengthResponse:
    geometry = GeometryKind.parse(req.geometry)
    if len(req.samples) < 2:
        raise ValueError("need at least 2 samples")
    rows = np.asarray(req.samples, dtype=float)
    curve = PolyCurve(rows[:, 0], rows[:, 1], rows[:, 2], geometry)
    return S.LengthResponse(
        value=curve_length(curve, timelike=req.timelike), samples=len(req.samples)
    )


def handle_render(req: S.RenderRequest) -> S.RenderResponse:
    scene = parse_scene(req.scene_text)
    panels = []
    for rendered in render_scene(scene):
        panels.append(
            S.PanelPayload(
                name=rendered.name,
                svg=rendered.svg,
                curves_csv=curves_csv(rendered) if req.include_curves_csv else None,
                raster_csv=(
                    raster_csv(rendered)
                    if req.include_raster_csv and rendered.raster is not None
                    else None
                ),
            )
        )
    return S.RenderResponse(panels=panels)


def handle_verify(req: S.VerifyRequest) -> list:
    reports = run_all(req.seed) if req.suite == "all" else [run_suite(req.suite, req.seed)]
    out = []
    for rep in reports:
        out.append(
            S.VerifyResponse(
                suite=rep.suite,
                passed=rep.passed,
                checks=[
                    S.CheckPayload(name=c.name, passed=c.passed, detail=c.detail)
                    for c in rep.checks
                ],
            )
        )
    return out

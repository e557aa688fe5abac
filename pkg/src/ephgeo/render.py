"""Deterministic SVG and CSV output for parsed scenes.

Same scene text in, byte-identical output out: no timestamps, no dict-order
surprises, fixed float formatting.  Geodesics draw blue, orbits green,
reverse-triangle cells red.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .curves import PolyCurve
from .cycles import (
    Cycle,
    coefficient_tag,
    elliptic_geodesic_through_i,
    geodesics_between,
    hyperbolic_geodesics_through_i,
    parabolic_geodesic,
    sample_points,
)
from .errors import SceneFormatError
from .geodesics import RegionRaster, TriangleClass, region_raster
from .hypercomplex import GeometryKind, point
from .moebius import SubgroupKind, default_subgroup, orbit_points
from .scene import Panel, Scene, Viewport
from .distance import DistanceSpec

GEODESIC_COLOR = "#1f4fd8"
ORBIT_COLOR = "#1f8f3a"
REVERSE_FILL = "#e0433b"
EQUALITY_FILL = "#8a8a8a"
AXIS_COLOR = "#b0b0b0"


@dataclass(frozen=True)
class SampledCurve:
    curve_id: str
    ts: np.ndarray
    us: np.ndarray
    vs: np.ndarray
    color: str
    tag: str = ""  # coefficient annotation, empty for orbits
    gaps: bool = True  # swept graphs may have culled regions worth splitting at


@dataclass(frozen=True)
class RenderedPanel:
    name: str
    svg: str
    curves: list
    raster: RegionRaster | None
    points: list  # marked (u, v) endpoints


def _cycle_curve(curve_id: str, c: Cycle, view: Viewport, color: str) -> SampledCurve:
    span = view.umax - view.umin
    pts = sample_points(c, 513, view.umin - 0.05 * span, view.umax + 0.05 * span)
    ts = np.arange(len(pts), dtype=float)
    us = np.array([p[0] for p in pts], dtype=float)
    vs = np.array([p[1] for p in pts], dtype=float)
    return SampledCurve(curve_id, ts, us, vs, color, coefficient_tag(c))


def _panel_geodesic_cycles(panel: Panel, spec) -> list:
    if panel.geometry is GeometryKind.ELLIPTIC:
        return [elliptic_geodesic_through_i(spec.t)]
    if panel.geometry is GeometryKind.PARABOLIC:
        return [parabolic_geodesic(panel.flavor, spec.t)]
    pair = hyperbolic_geodesics_through_i(spec.t)
    return [pair[0] if spec.branch == "spacelike" else pair[1]]


def _collect_curves(panel: Panel, view: Viewport):
    curves: list[SampledCurve] = []
    marked: list[tuple[float, float]] = []
    for idx, g in enumerate(panel.geodesics, start=1):
        for sub, c in enumerate(_panel_geodesic_cycles(panel, g)):
            cid = f"geodesic{idx}" if sub == 0 else f"geodesic{idx}.{sub + 1}"
            curves.append(_cycle_curve(cid, c, view, GEODESIC_COLOR))
    for idx, o in enumerate(panel.orbits, start=1):
        if not (o.stop > o.start and o.count >= 2):
            raise SceneFormatError("[orbit] needs stop > start and count >= 2")
        kind = SubgroupKind.parse(o.subgroup) if o.subgroup else default_subgroup(panel.geometry)
        w0 = point(o.center[0], o.center[1], panel.geometry)
        curve = orbit_points(kind, w0, np.linspace(o.start, o.stop, o.count))
        curves.append(
            SampledCurve(f"orbit{idx}", curve.t, curve.u, curve.v, ORBIT_COLOR, gaps=False)
        )
    for idx, p in enumerate(panel.pairs, start=1):
        if panel.geometry is not GeometryKind.PARABOLIC:
            raise SceneFormatError("[pair] sections need a parabolic panel")
        w1 = point(p.w1[0], p.w1[1], panel.geometry)
        w2 = point(p.w2[0], p.w2[1], panel.geometry)
        for sub, c in enumerate(geodesics_between(w1, w2, panel.flavor), start=1):
            curves.append(_cycle_curve(f"pair{idx}.{sub}", c, view, GEODESIC_COLOR))
        marked.extend([p.w1, p.w2])
    return curves, marked


def _render_raster(panel: Panel, view: Viewport) -> RegionRaster | None:
    if not panel.rasters:
        return None
    if len(panel.rasters) > 1:
        raise SceneFormatError("at most one [raster] per panel")
    r = panel.rasters[0]
    spec = DistanceSpec(panel.geometry, panel.flavor)
    w1 = point(r.w1[0], r.w1[1], panel.geometry)
    w2 = point(r.w2[0], r.w2[1], panel.geometry)
    bbox = ((view.umin, view.umax), (max(view.vmin, 0.0), view.vmax))
    return region_raster(spec, w1, w2, bbox, r.nx, r.ny, mode=r.mode)


class _Mapper:
    def __init__(self, view: Viewport):
        self.view = view
        self.sx = view.width / (view.umax - view.umin)
        self.sy = view.height / (view.vmax - view.vmin)

    def x(self, u: float) -> float:
        return (u - self.view.umin) * self.sx

    def y(self, v: float) -> float:
        return self.view.height - (v - self.view.vmin) * self.sy


def _polyline_chunks(us: np.ndarray, vs: np.ndarray) -> list:
    """Split samples into contiguous runs (graph sweeps can have gaps)."""
    if len(us) == 0:
        return []
    if len(us) == 1:
        return [(us, vs)]
    steps = np.abs(np.diff(us))
    positive = steps[steps > 0]
    typical = np.median(positive) if len(positive) else 0.0
    chunks = []
    start = 0
    for i, s in enumerate(steps):
        if typical > 0 and s > 3.0 * typical:
            chunks.append((us[start : i + 1], vs[start : i + 1]))
            start = i + 1
    chunks.append((us[start:], vs[start:]))
    return [(cu, cv) for cu, cv in chunks if len(cu) >= 2]


def _svg_panel(panel: Panel, view: Viewport, curves, raster, marked) -> str:
    m = _Mapper(view)
    w, h = view.width, view.height
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
        f'viewBox="0 0 {w} {h}">',
        f'<rect x="0" y="0" width="{w}" height="{h}" fill="white"/>',
    ]
    if raster is not None:
        du = float(raster.us[1] - raster.us[0]) if len(raster.us) > 1 else 0.0
        dv = float(raster.vs[1] - raster.vs[0]) if len(raster.vs) > 1 else 0.0
        for i, cu in enumerate(raster.us):
            for j, cv in enumerate(raster.vs):
                cls = raster.classes[i][j]
                if cls is TriangleClass.REVERSE:
                    fill = REVERSE_FILL
                elif cls is TriangleClass.EQUALITY:
                    fill = EQUALITY_FILL
                else:
                    continue
                x0 = m.x(float(cu) - du / 2)
                y0 = m.y(float(cv) + dv / 2)
                out.append(
                    f'<rect x="{x0:.2f}" y="{y0:.2f}" '
                    f'width="{du * m.sx:.2f}" height="{dv * m.sy:.2f}" '
                    f'fill="{fill}" stroke="none"/>'
                )
    # axes
    if view.vmin <= 0.0 <= view.vmax:
        y0 = m.y(0.0)
        out.append(
            f'<line x1="0" y1="{y0:.2f}" x2="{w}" y2="{y0:.2f}" '
            f'stroke="{AXIS_COLOR}" stroke-width="1"/>'
        )
    if view.umin <= 0.0 <= view.umax:
        x0 = m.x(0.0)
        out.append(
            f'<line x1="{x0:.2f}" y1="0" x2="{x0:.2f}" y2="{h}" '
            f'stroke="{AXIS_COLOR}" stroke-width="1"/>'
        )
    for c in curves:
        chunks = _polyline_chunks(c.us, c.vs) if c.gaps else [(c.us, c.vs)]
        for cu, cv in chunks:
            coords = " ".join(f"{m.x(float(u)):.2f},{m.y(float(v)):.2f}" for u, v in zip(cu, cv))
            out.append(
                f'<polyline points="{coords}" fill="none" '
                f'stroke="{c.color}" stroke-width="1.5"/>'
            )
    for u, v in marked:
        out.append(
            f'<circle cx="{m.x(u):.2f}" cy="{m.y(v):.2f}" r="3" fill="black"/>'
        )
    tags = [c.tag for c in curves if c.tag]
    for row, tag in enumerate(tags):
        out.append(
            f'<text x="8" y="{16 + 14 * row}" font-family="monospace" '
            f'font-size="11" fill="{GEODESIC_COLOR}">{tag}</text>'
        )
    out.append(
        f'<text x="8" y="{h - 8}" font-family="monospace" font-size="11" '
        f'fill="#404040">{panel.name}</text>'
    )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_panel(panel: Panel, view: Viewport) -> RenderedPanel:
    curves, marked = _collect_curves(panel, view)
    raster = _render_raster(panel, view)
    svg = _svg_panel(panel, view, curves, raster, marked)
    return RenderedPanel(panel.name, svg, curves, raster, marked)


def render_scene(scene: Scene) -> list:
    return [render_panel(p, scene.viewport) for p in scene.panels]


def panel_filename(stem: str, scene: Scene, panel_name: str) -> str:
    if len(scene.panels) == 1:
        return f"{stem}.svg"
    return f"{stem}-{panel_name}.svg"


def curves_csv(rendered: RenderedPanel) -> str:
    lines = ["curve_id,T,u,v"]
    for c in rendered.curves:
        for t, u, v in zip(c.ts, c.us, c.vs):
            lines.append(f"{c.curve_id},{t:.12g},{u:.12g},{v:.12g}")
    return "\n".join(lines) + "\n"


def raster_csv(rendered: RenderedPanel) -> str:
    if rendered.raster is None:
        raise SceneFormatError("panel has no [raster] section")
    r = rendered.raster
    lines = ["i,j,u,v,class"]
    for i, cu in enumerate(r.us):
        for j, cv in enumerate(r.vs):
            lines.append(f"{i},{j},{cu:.12g},{cv:.12g},{r.classes[i][j].value}")
    return "\n".join(lines) + "\n"

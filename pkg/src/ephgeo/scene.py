"""Line-oriented scene files: `[section]` headers and `key = value` lines.

A scene holds one shared viewport plus one or more panels; each panel picks
a geometry/flavor and lists objects (geodesics through i, subgroup orbits,
pair geodesics, triangle-region rasters).  `#` starts a comment.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cycles import ParabolicFlavor
from .errors import SceneFormatError
from .hypercomplex import GeometryKind


@dataclass(frozen=True)
class Viewport:
    umin: float = -3.0
    umax: float = 3.0
    vmin: float = 0.0
    vmax: float = 3.0
    width: int = 420
    height: int = 420


@dataclass(frozen=True)
class GeodesicSpec:
    t: float
    branch: str = "spacelike"  # hyperbolic panels: spacelike | timelike


@dataclass(frozen=True)
class OrbitSpec:
    center: tuple[float, float]
    start: float
    stop: float
    count: int = 129
    subgroup: str = ""  # default picked by geometry


@dataclass(frozen=True)
class PairSpec:
    w1: tuple[float, float]
    w2: tuple[float, float]


@dataclass(frozen=True)
class RasterSpec:
    w1: tuple[float, float]
    w2: tuple[float, float]
    nx: int = 100
    ny: int = 100
    mode: str = "strip"


@dataclass
class Panel:
    name: str = "panel"
    geometry: GeometryKind = GeometryKind.PARABOLIC
    flavor: ParabolicFlavor = ParabolicFlavor.PP
    geodesics: list = field(default_factory=list)
    orbits: list = field(default_factory=list)
    pairs: list = field(default_factory=list)
    rasters: list = field(default_factory=list)


@dataclass
class Scene:
    viewport: Viewport = field(default_factory=Viewport)
    panels: list = field(default_factory=list)


def _pair(value: str, where: str) -> tuple[float, float]:
    parts = value.split(",")
    if len(parts) != 2:
        raise SceneFormatError(f"{where}: expected 'u,v', got {value!r}")
    try:
        return (float(parts[0]), float(parts[1]))
    except ValueError as exc:
        raise SceneFormatError(f"{where}: bad number in {value!r}") from exc


def _num(value: str, where: str) -> float:
    try:
        return float(value)
    except ValueError as exc:
        raise SceneFormatError(f"{where}: bad number {value!r}") from exc


def _int(value: str, where: str) -> int:
    try:
        return int(value)
    except ValueError as exc:
        raise SceneFormatError(f"{where}: bad integer {value!r}") from exc


def parse_scene(text: str) -> Scene:
    scene = Scene()
    view: dict[str, float] = {}
    panel: Panel | None = None
    section = ""
    fields: dict[str, str] = {}
    lineno_of_section = 0

    def flush() -> None:
        nonlocal panel
        if not section:
            return
        where = f"[{section}] at line {lineno_of_section}"
        if section == "scene":
            for key, val in fields.items():
                if key in ("umin", "umax", "vmin", "vmax"):
                    view[key] = _num(val, where)
                elif key in ("width", "height"):
                    view[key] = _int(val, where)
                else:
                    raise SceneFormatError(f"{where}: unknown key {key!r}")
            return
        if section == "panel":
            panel = Panel(name=fields.get("name", f"panel{len(scene.panels) + 1}"))
            if "geometry" in fields:
                try:
                    panel.geometry = GeometryKind.parse(fields["geometry"])
                except ValueError as exc:
                    raise SceneFormatError(f"{where}: {exc}") from exc
            if "flavor" in fields:
                try:
                    panel.flavor = ParabolicFlavor.parse(fields["flavor"])
                except ValueError as exc:
                    raise SceneFormatError(f"{where}: {exc}") from exc
            extra = set(fields) - {"name", "geometry", "flavor"}
            if extra:
                raise SceneFormatError(f"{where}: unknown keys {sorted(extra)}")
            scene.panels.append(panel)
            return
        if panel is None:
            panel = Panel()
            scene.panels.append(panel)
        if section == "geodesic":
            if "t" not in fields:
                raise SceneFormatError(f"{where}: missing key 't'")
            branch = fields.get("branch", "spacelike")
            if branch not in ("spacelike", "timelike"):
                raise SceneFormatError(f"{where}: branch must be spacelike|timelike")
            extra = set(fields) - {"t", "branch"}
            if extra:
                raise SceneFormatError(f"{where}: unknown keys {sorted(extra)}")
            panel.geodesics.append(GeodesicSpec(_num(fields["t"], where), branch))
        elif section == "orbit":
            for need in ("center", "start", "stop"):
                if need not in fields:
                    raise SceneFormatError(f"{where}: missing key {need!r}")
            extra = set(fields) - {"center", "start", "stop", "count", "subgroup"}
            if extra:
                raise SceneFormatError(f"{where}: unknown keys {sorted(extra)}")
            panel.orbits.append(
                OrbitSpec(
                    _pair(fields["center"], where),
                    _num(fields["start"], where),
                    _num(fields["stop"], where),
                    _int(fields.get("count", "129"), where),
                    fields.get("subgroup", ""),
                )
            )
        elif section == "pair":
            for need in ("w1", "w2"):
                if need not in fields:
                    raise SceneFormatError(f"{where}: missing key {need!r}")
            extra = set(fields) - {"w1", "w2"}
            if extra:
                raise SceneFormatError(f"{where}: unknown keys {sorted(extra)}")
            panel.pairs.append(PairSpec(_pair(fields["w1"], where), _pair(fields["w2"], where)))
        elif section == "raster":
            for need in ("w1", "w2"):
                if need not in fields:
                    raise SceneFormatError(f"{where}: missing key {need!r}")
            mode = fields.get("mode", "strip")
            if mode not in ("strip", "full"):
                raise SceneFormatError(f"{where}: mode must be strip|full")
            extra = set(fields) - {"w1", "w2", "nx", "ny", "mode"}
            if extra:
                raise SceneFormatError(f"{where}: unknown keys {sorted(extra)}")
            panel.rasters.append(
                RasterSpec(
                    _pair(fields["w1"], where),
                    _pair(fields["w2"], where),
                    _int(fields.get("nx", "100"), where),
                    _int(fields.get("ny", "100"), where),
                    mode,
                )
            )
        else:
            raise SceneFormatError(f"unknown section [{section}] at line {lineno_of_section}")

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            flush()
            section = line[1:-1].strip().lower()
            fields = {}
            lineno_of_section = lineno
            continue
        if "=" not in line:
            raise SceneFormatError(f"line {lineno}: expected 'key = value', got {raw!r}")
        if not section:
            raise SceneFormatError(f"line {lineno}: key outside any [section]")
        key, _, value = line.partition("=")
        key = key.strip().lower()
        if key in fields:
            raise SceneFormatError(f"line {lineno}: duplicate key {key!r} in [{section}]")
        fields[key] = value.strip()
    flush()

    if not scene.panels:
        scene.panels.append(Panel())
    vp = Viewport(
        umin=view.get("umin", -3.0),
        umax=view.get("umax", 3.0),
        vmin=view.get("vmin", 0.0),
        vmax=view.get("vmax", 3.0),
        width=int(view.get("width", 420)),
        height=int(view.get("height", 420)),
    )
    if not (vp.umax > vp.umin and vp.vmax > vp.vmin and vp.vmin >= 0):
        raise SceneFormatError("viewport must satisfy umin < umax, 0 <= vmin < vmax")
    scene.viewport = vp
    return scene

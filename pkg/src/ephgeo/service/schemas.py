"""Request/response models shared by the HTTP service and the CLI client."""

from __future__ import annotations

from pydantic import BaseModel, Field


class PointModel(BaseModel):
    u: float
    v: float


class DistanceRequest(BaseModel):
    geometry: str = "elliptic"
    flavor: str = "pp"
    label: str = "identity"
    z: PointModel
    w: PointModel


class DistanceResponse(BaseModel):
    value: float
    core: float
    interval_type: str
    degenerate: str = ""  # "", "vertical", or "lightlike"


class CycleModel(BaseModel):
    k: float
    l: float
    n: float
    m: float
    mode: str
    degenerate: bool = False
    tag: str = ""


class FocusModel(BaseModel):
    notion: str
    u: float
    v: float
    on_axis: bool


class GeodesicRequest(BaseModel):
    geometry: str = "parabolic"
    flavor: str = "pp"
    t: float | None = None
    w1: PointModel | None = None
    w2: PointModel | None = None
    branch: str = "both"  # through-i hyperbolic: spacelike | timelike | both


class GeodesicResponse(BaseModel):
    cycles: list[CycleModel]
    foci: list[FocusModel] = Field(default_factory=list)


class OrbitRequest(BaseModel):
    geometry: str = "elliptic"
    subgroup: str = ""  # default chosen by geometry
    center: PointModel
    start: float
    stop: float
    count: int = 129


class OrbitResponse(BaseModel):
    subgroup: str
    ts: list[float]
    us: list[float]
    vs: list[float]


class ClassifyRequest(BaseModel):
    flavor: str = "pp"
    label: str = "identity"
    w1: PointModel
    w2: PointModel
    z: PointModel
    branch: int = 0


class ClassifyResponse(BaseModel):
    triangle_class: str
    diff: float | None = None  # d(w1,w2) - d(w1,z) - d(z,w2); None when degenerate


class CayleyRequest(BaseModel):
    flavor: str = "pp"
    point: PointModel
    inverse: bool = False


class CayleyResponse(BaseModel):
    u: float
    v: float
    in_disk: bool


class LengthRequest(BaseModel):
    geometry: str = "elliptic"
    timelike: bool = False
    samples: list[tuple[float, float, float]]  # rows (T, u, v)


class LengthResponse(BaseModel):
    value: float
    samples: int


class RenderRequest(BaseModel):
    scene_text: str
    include_curves_csv: bool = False
    include_raster_csv: bool = False


class PanelPayload(BaseModel):
    name: str
    svg: str
    curves_csv: str | None = None
    raster_csv: str | None = None


class RenderResponse(BaseModel):
    panels: list[PanelPayload]


class VerifyRequest(BaseModel):
    suite: str
    seed: int = 0


class CheckPayload(BaseModel):
    name: str
    passed: bool
    detail: str


class VerifyResponse(BaseModel):
    suite: str
    passed: bool
    checks: list[CheckPayload]


class ErrorPayload(BaseModel):
    error: str
    detail: str

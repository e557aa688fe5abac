"""Invariant metrics, geodesics and distances on the EPH upper half-plane.

The plane is coordinatized by numbers u + iv with i^2 = sigma in {-1, 0, 1}
(complex, dual, double); determinant-one 2x2 matrices act by fractional
linear maps.  This package computes the invariant distances of all three
geometries, the parabolic plane in its three flavors, the geodesic cycle
families, the flavored disk models, and deterministic SVG/CSV figures,
behind a CLI and an HTTP service.
"""

from .curves import PolyCurve, concatenate
from .cycles import (
    Cycle,
    FocusNotion,
    ParabolicFlavor,
    QuadraticMode,
    axis_focus_report,
    coefficient_tag,
    elliptic_arc,
    elliptic_geodesic_through_i,
    fit_cycle,
    geodesics_between,
    graph_positive_intervals,
    hyperbolic_geodesics_through_i,
    is_focal_orthogonal,
    parabola_focus,
    parabolic_geodesic,
    sample_points,
)
from .distance import (
    DistanceSpec,
    IntervalType,
    Relabel,
    RelabelFit,
    cayley,
    cayley_inverse,
    core_distance,
    disk_distance,
    distance,
    fit_relabel,
    interval_type,
    invariant_ratio,
    inverse_sine,
)
from .errors import (
    DegenerateCycle,
    DegenerateFit,
    DomainExceeded,
    GeometryError,
    ImaginaryLength,
    InsufficientSamples,
    NoRealSolution,
    NonMonotoneSamples,
    NotInUpperHalfPlane,
    OutsideDisk,
    PointAtInfinity,
    PointsNotOnCycle,
    PoleOnSegment,
    SceneFormatError,
    StepTooLarge,
    UnsupportedGeometry,
    VerticalPair,
    ZeroDivisor,
)
from .geodesics import (
    GridPath,
    RegionRaster,
    TriangleClass,
    additivity_defect,
    classify_triangle,
    fit_geodesic_parameter,
    geodesic_slope,
    grid_shortest_path,
    integrate_geodesic,
    region_raster,
    triangle_compare,
)
from .hypercomplex import GeometryKind, HNumber, imaginary_unit, modulus_sq, point
from .metric import MetricForm, curve_length, el_residual, metric_at, parabola_segment_length
from .moebius import (
    MoebiusMap,
    SubgroupKind,
    apply,
    default_subgroup,
    fixes_i,
    jacobian_at_i,
    map_point_to_i,
    orbit_points,
    random_det_one,
    subgroup_element,
)
from .scene import Scene, parse_scene
from .render import RenderedPanel, curves_csv, panel_filename, raster_csv, render_panel, render_scene
from .verify import SUITES, SuiteReport, run_all, run_suite

__version__ = "0.1.0"

__all__ = [
    "PolyCurve",
    "concatenate",
    "Cycle",
    "FocusNotion",
    "ParabolicFlavor",
    "QuadraticMode",
    "axis_focus_report",
    "coefficient_tag",
    "elliptic_arc",
    "elliptic_geodesic_through_i",
    "fit_cycle",
    "geodesics_between",
    "graph_positive_intervals",
    "hyperbolic_geodesics_through_i",
    "is_focal_orthogonal",
    "parabola_focus",
    "parabolic_geodesic",
    "sample_points",
    "DistanceSpec",
    "IntervalType",
    "Relabel",
    "RelabelFit",
    "cayley",
    "cayley_inverse",
    "core_distance",
    "disk_distance",
    "distance",
    "fit_relabel",
    "interval_type",
    "invariant_ratio",
    "inverse_sine",
    "GeometryError",
    "DegenerateCycle",
    "DegenerateFit",
    "DomainExceeded",
    "ImaginaryLength",
    "InsufficientSamples",
    "NoRealSolution",
    "NonMonotoneSamples",
    "NotInUpperHalfPlane",
    "OutsideDisk",
    "PointAtInfinity",
    "PointsNotOnCycle",
    "PoleOnSegment",
    "SceneFormatError",
    "StepTooLarge",
    "UnsupportedGeometry",
    "VerticalPair",
    "ZeroDivisor",
    "GridPath",
    "RegionRaster",
    "TriangleClass",
    "additivity_defect",
    "classify_triangle",
    "fit_geodesic_parameter",
    "geodesic_slope",
    "grid_shortest_path",
    "integrate_geodesic",
    "region_raster",
    "triangle_compare",
    "GeometryKind",
    "HNumber",
    "imaginary_unit",
    "modulus_sq",
    "point",
    "MetricForm",
    "curve_length",
    "el_residual",
    "metric_at",
    "parabola_segment_length",
    "MoebiusMap",
    "SubgroupKind",
    "apply",
    "default_subgroup",
    "fixes_i",
    "jacobian_at_i",
    "map_point_to_i",
    "orbit_points",
    "random_det_one",
    "subgroup_element",
    "Scene",
    "parse_scene",
    "curves_csv",
    "panel_filename",
    "raster_csv",
    "render_panel",
    "render_scene",
    "RenderedPanel",
    "SUITES",
    "SuiteReport",
    "run_all",
    "run_suite",
    "__version__",
]

"""Hyperbolic polygonal-cusp isoperimetry and filling-pair length bounds."""

from ._core import (
    DEFAULT_SEED,
    PI,
    CombinatorialMap,
    CuspTriangle,
    FiniteTriangle,
    InvariantError,
    MapFormatError,
    OptimizationReport,
    PolygonalCusp,
    RegularCusp,
    UhpPoint,
    VerifyTolerances,
    axis_geodesic_circle,
    derived_base_angle,
    distance,
    ideal_apex_angle_sum,
    length_lower_bound,
    load_map,
    perimeter_comparison,
    polygon_vs_cusp_gap,
    regular_cusp_from_angle,
    regular_cusp_from_area,
    regular_cusp_from_perimeter,
    regular_right_polygon_perimeter,
    scan_ideal_apex_minimum,
    sliding_apex_angle_sum_derivative,
    sliding_apex_angles,
    sliding_apex_isosceles_angle_sum,
    symmetric_base_angle,
    triangle_angles,
    verify_bound_pipeline,
    verify_max_area,
    verify_min_perimeter,
    verify_polygon_vs_cusp_gap,
)

__all__ = [
    "DEFAULT_SEED",
    "PI",
    "CombinatorialMap",
    "CuspTriangle",
    "FiniteTriangle",
    "InvariantError",
    "MapFormatError",
    "OptimizationReport",
    "PolygonalCusp",
    "RegularCusp",
    "UhpPoint",
    "VerifyTolerances",
    "axis_geodesic_circle",
    "derived_base_angle",
    "distance",
    "ideal_apex_angle_sum",
    "length_lower_bound",
    "load_map",
    "perimeter_comparison",
    "polygon_vs_cusp_gap",
    "regular_cusp_from_angle",
    "regular_cusp_from_area",
    "regular_cusp_from_perimeter",
    "regular_right_polygon_perimeter",
    "scan_ideal_apex_minimum",
    "sliding_apex_angle_sum_derivative",
    "sliding_apex_angles",
    "sliding_apex_isosceles_angle_sum",
    "symmetric_base_angle",
    "triangle_angles",
    "verify_bound_pipeline",
    "verify_max_area",
    "verify_min_perimeter",
    "verify_polygon_vs_cusp_gap",
]

__version__ = "0.1.0"

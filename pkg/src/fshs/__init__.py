"""Minimal fillings of finite boundaries in the Euclidean plane."""

__version__ = "0.1.0"

from .config import DEFAULT, Config  # noqa: E402
from .geometry import ConvexPolygon, FinitePoints, convex_hull  # noqa: E402
from .regions import NonConvergence, hausdorff_distance  # noqa: E402
from .steiner import (  # noqa: E402
    Boundary,
    NoConvergence,
    SteinerReport,
    build_K_d,
    check_solution_vector,
    grid_oracle,
    solve,
    total_deviation,
)
from .classification import check_far_point_theorem, check_pHP, classify_points, hp_set  # noqa: E402
from .stability import convexify_boundary, dstay_check, necessary_condition, stability_verdict  # noqa: E402

__all__ = [
    "Boundary", "Config", "ConvexPolygon", "DEFAULT", "FinitePoints", "NoConvergence",
    "NonConvergence", "SteinerReport", "build_K_d", "check_far_point_theorem", "check_pHP",
    "check_solution_vector", "classify_points", "convex_hull", "convexify_boundary",
    "dstay_check", "grid_oracle", "hausdorff_distance", "hp_set", "necessary_condition",
    "solve", "stability_verdict", "total_deviation",
]

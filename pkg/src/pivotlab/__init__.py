"""pivotlab: pivot points of least-squares regression lines under datum repetition.

Weighted fits and closed-form pivot points, sign-region classification of
pivot loci (triangle, segment, and convex-hull bounds), the iterated
pseudopivot map for collinear data, and a brute-force verification oracle.
"""

from .dynamics import (
    BifurcationClass,
    IterationTrace,
    PseudopivotState,
    RangeGrowthReport,
    classify_bifurcation,
    conjecture_range_check,
    iterate,
    permutation_sequence,
    pseudopivot_step,
)
from .errors import (
    DegenerateIntervalError,
    DegenerateStateError,
    DegenerateTriangleError,
    DegenerateXError,
    FormatError,
    LabelError,
    PivotlabError,
    ShapeError,
    UsageError,
)
from .geometry import (
    CentricPoint,
    Multiplicities,
    Point,
    PointSet,
    PivotResult,
    RegressionLine,
    centric_transform,
    coordinate_scale,
    fit_weighted_line,
    pivot_point,
    pivot_point_weighted,
    transform_T,
)
from .oracle import (
    ConvergenceReport,
    ExpandedSystem,
    InvarianceReport,
    expand_multiplicities,
    farthest_probe_label,
    fit_expanded,
    verify_convergence,
    verify_pivot_invariance,
)
from .regions import (
    BarycentricCoords,
    ConvexHull,
    HullLocation,
    RegionReport,
    SignPattern,
    SweepRecord,
    Triangle,
    barycentric_coords,
    convex_hull,
    extreme_labels,
    four_point_region_sweep,
    hull_bound_check,
    iter_sweep_records,
    point_in_hull,
    sign_pattern,
    three_point_line_check,
)

__version__ = "0.1.0"

__all__ = [
    "BarycentricCoords",
    "BifurcationClass",
    "CentricPoint",
    "ConvexHull",
    "ConvergenceReport",
    "DegenerateIntervalError",
    "DegenerateStateError",
    "DegenerateTriangleError",
    "DegenerateXError",
    "ExpandedSystem",
    "FormatError",
    "HullLocation",
    "InvarianceReport",
    "IterationTrace",
    "LabelError",
    "Multiplicities",
    "PivotResult",
    "PivotlabError",
    "Point",
    "PointSet",
    "PseudopivotState",
    "RangeGrowthReport",
    "RegionReport",
    "RegressionLine",
    "ShapeError",
    "SignPattern",
    "SweepRecord",
    "Triangle",
    "UsageError",
    "barycentric_coords",
    "centric_transform",
    "classify_bifurcation",
    "conjecture_range_check",
    "convex_hull",
    "coordinate_scale",
    "expand_multiplicities",
    "extreme_labels",
    "farthest_probe_label",
    "fit_expanded",
    "fit_weighted_line",
    "four_point_region_sweep",
    "hull_bound_check",
    "iter_sweep_records",
    "iterate",
    "permutation_sequence",
    "pivot_point",
    "pivot_point_weighted",
    "point_in_hull",
    "pseudopivot_step",
    "sign_pattern",
    "three_point_line_check",
    "transform_T",
    "verify_convergence",
    "verify_pivot_invariance",
]

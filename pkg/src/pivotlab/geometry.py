"""Weighted line fits and the pivot points they turn on.

A repeated datum drags the least-squares line toward itself, yet for each
point of a set there is one location, computable in closed form from
displacements relative to that point, that every such line passes through.
This module provides the planar value types, the weighted fit, the pivot
formulas (including the at-infinity case), and the interval-normalizing
transform used to relate a point's abscissa to its pivot's abscissa.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    DegenerateIntervalError,
    DegenerateXError,
    LabelError,
    ShapeError,
)

# |weighted chi sum| at or below this, relative to max|chi| * total weight,
# counts as a vanishing denominator (pivot at infinity).
AT_INFINITY_REL_TOL = 1e-12

# Weighted x-variance at or below (this * max|x|)^2 * total weight makes a
# y-on-x fit degenerate.
DEGENERATE_X_REL_TOL = 1e-12


@dataclass(frozen=True)
class Point:
    """A planar point; coordinates must be finite."""

    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"point coordinates must be finite, got ({self.x}, {self.y})")

    def translated(self, dx: float, dy: float) -> Point:
        return Point(self.x + dx, self.y + dy)

    def distance_to(self, other: Point) -> float:
        return math.hypot(self.x - other.x, self.y - other.y)


@dataclass(frozen=True)
class CentricPoint:
    """Displacement of a point from an anchor: chi along x, gamma along y."""

    chi: float
    gamma: float


def _as_point(obj) -> Point:
    if isinstance(obj, Point):
        return obj
    x, y = obj
    return Point(float(x), float(y))


@dataclass(frozen=True, init=False)
class PointSet:
    """Ordered planar points with stable 1-based labels.

    Requires at least two points and at least two distinct x values,
    since every fit here is y on x. Coincident points are allowed and
    keep their own labels.
    """

    points: tuple[Point, ...]

    def __init__(self, points: Iterable[Point | Sequence[float]]):
        pts = tuple(_as_point(p) for p in points)
        if len(pts) < 2:
            raise ShapeError(f"need at least 2 points, got {len(pts)}")
        if all(p.x == pts[0].x for p in pts):
            raise DegenerateXError("all x values are equal; y-on-x fits are undefined")
        object.__setattr__(self, "points", pts)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def labels(self) -> range:
        return range(1, len(self.points) + 1)

    def index(self, label: int) -> int:
        """0-based position of a 1-based label."""
        try:
            value = operator.index(label)
        except TypeError:
            raise LabelError(f"label {label!r} is not an integer") from None
        if not 1 <= value <= len(self.points):
            raise LabelError(f"label {label!r} not in 1..{len(self.points)}")
        return value - 1

    def point(self, label: int) -> Point:
        return self.points[self.index(label)]

    def xs(self) -> tuple[float, ...]:
        return tuple(p.x for p in self.points)

    def ys(self) -> tuple[float, ...]:
        return tuple(p.y for p in self.points)

    def translated(self, dx: float, dy: float) -> PointSet:
        return PointSet(p.translated(dx, dy) for p in self.points)


@dataclass(frozen=True, init=False)
class Multiplicities:
    """Per-point weights delta_j >= 1; delta_j - 1 is the repetition count."""

    delta: tuple[int, ...]

    def __init__(self, delta: Iterable[int]):
        vals = []
        for d in delta:
            try:
                v = operator.index(d)
            except TypeError:
                raise ValueError(f"multiplicity {d!r} is not an integer") from None
            if v < 1:
                raise ValueError(f"multiplicity {v} is below 1")
            vals.append(v)
        object.__setattr__(self, "delta", tuple(vals))

    @classmethod
    def ones(cls, n: int) -> Multiplicities:
        return cls((1,) * n)

    @classmethod
    def from_repetitions(cls, ks: Iterable[int]) -> Multiplicities:
        """Build from repetition counts k_j, so delta_j = k_j + 1."""
        return cls(tuple(int(k) + 1 for k in ks))

    def repetitions(self) -> tuple[int, ...]:
        return tuple(d - 1 for d in self.delta)

    def __len__(self) -> int:
        return len(self.delta)


@dataclass(frozen=True)
class RegressionLine:
    """A fitted line y = m*x + b with its weighted sum of squared errors."""

    m: float
    b: float
    sse: float

    def y_at(self, x: float) -> float:
        return self.m * x + self.b

    def distance_to(self, p: Point) -> float:
        """Perpendicular distance from a point to the line."""
        return abs(self.m * p.x + self.b - p.y) / math.sqrt(1.0 + self.m * self.m)


@dataclass(frozen=True)
class PivotResult:
    """Either a finite pivot point or a pivot at infinity."""

    point: Point | None

    @classmethod
    def finite(cls, x: float, y: float) -> PivotResult:
        return cls(Point(x, y))

    @classmethod
    def at_infinity(cls) -> PivotResult:
        return cls(None)

    @property
    def is_finite(self) -> bool:
        return self.point is not None


def coordinate_scale(s: PointSet) -> float:
    """Largest coordinate magnitude in the set; the reference for relative tolerances."""
    return max(max(abs(p.x), abs(p.y)) for p in s.points)


def _weights(s: PointSet, d: Multiplicities | None) -> tuple[float, ...]:
    if d is None:
        return (1.0,) * len(s)
    if len(d) != len(s):
        raise ShapeError(f"got {len(d)} multiplicities for {len(s)} points")
    return tuple(float(v) for v in d.delta)


def centric_transform(s: PointSet, i: int) -> tuple[CentricPoint, ...]:
    """Displacements of every point from the anchor labeled i.

    The anchor's own entry is exactly (0, 0).
    """
    anchor = s.point(i)
    return tuple(CentricPoint(p.x - anchor.x, p.y - anchor.y) for p in s.points)


def fit_weighted_line(s: PointSet, d: Multiplicities | None = None) -> RegressionLine:
    """Least-squares line for the set with each point weighted by its multiplicity.

    Solves the 2x2 weighted normal equations in closed form; equivalent to the
    unweighted fit of the multiset in which point j appears delta_j times.
    """
    w = _weights(s, d)
    sw = sx = sy = sxx = sxy = 0.0
    for wj, p in zip(w, s.points):
        sw += wj
        sx += wj * p.x
        sy += wj * p.y
        sxx += wj * (p.x * p.x)
        sxy += wj * (p.x * p.y)
    xscale = max(abs(p.x) for p in s.points)
    variance = sxx - sx * sx / sw
    if variance <= sw * (DEGENERATE_X_REL_TOL * xscale) ** 2:
        raise DegenerateXError("weighted x values are (numerically) all equal")
    m = (sw * sxy - sx * sy) / (sw * sxx - sx * sx)
    b = (sy - m * sx) / sw
    sse = 0.0
    for wj, p in zip(w, s.points):
        r = m * p.x + b - p.y
        sse += wj * (r * r)
    return RegressionLine(m, b, sse)


def pivot_point_weighted(s: PointSet, i: int, d: Multiplicities | None = None) -> PivotResult:
    """Pivot of the point labeled i under per-point multiplicities.

    Computed from displacements relative to the anchor: the abscissa offset is
    the weighted ratio sum(delta*chi^2) / sum(delta*chi) and the ordinate
    offset is sum(delta*chi*gamma) / sum(delta*chi). The anchor's own
    multiplicity multiplies a zero displacement, so it never affects the
    result: this is what makes the point a pivot. A vanishing weighted
    denominator yields the at-infinity case.
    """
    w = _weights(s, d)
    anchor = s.point(i)
    num_x = num_y = den = 0.0
    max_chi = 0.0
    for wj, p in zip(w, s.points):
        chi = p.x - anchor.x
        gamma = p.y - anchor.y
        num_x += wj * (chi * chi)
        num_y += wj * (chi * gamma)
        den += wj * chi
        max_chi = max(max_chi, abs(chi))
    if abs(den) <= AT_INFINITY_REL_TOL * max_chi * sum(w):
        return PivotResult.at_infinity()
    return PivotResult.finite(anchor.x + num_x / den, anchor.y + num_y / den)


def pivot_point(s: PointSet, i: int) -> PivotResult:
    """Pivot of the point labeled i with no repetitions (all multiplicities 1)."""
    return pivot_point_weighted(s, i, None)


def transform_T(chi: float, chi2: float, chi3: float) -> float:
    """Affine map sending the interval [chi2, chi3] onto [-1, +1].

    Under this normalization the transformed pivot abscissa of the anchor of a
    three-point set is the negative reciprocal of the anchor's own transformed
    abscissa (a weighted negative inversion).
    """
    if chi2 == chi3:
        raise DegenerateIntervalError(f"interval endpoints coincide at {chi2}")
    return (chi - (chi2 + chi3) / 2.0) / ((chi3 - chi2) / 2.0)

"""Sign-region classification of pivot loci.

Barycentric coordinates split the plane around a triangle into seven sign
regions; which region a pivot can fall in is determined solely by where its
source point sits in the x-order of the set. The sweep verifiers enumerate
every combination of repetition counts up to a cap and classify every pivot:

- four points: pivots of the outermost points stay inside the triangle of the
  other three, pivots of the two inner points stay in two specific unbounded
  regions, and the two alternating-sign regions are never hit;
- three points: pivots land on the line through the other two points, on the
  segment for outer labels and strictly off it for the inner label;
- n points: pivots of the extreme-x labels stay inside the convex hull of the
  remaining points.

Boundary hits (zero signs, segment endpoints, hull edges) are classified as
their own outcomes and never counted as violations; at-infinity pivots are
tallied separately.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np

from .errors import DegenerateTriangleError, ShapeError
from .geometry import (
    AT_INFINITY_REL_TOL,
    Point,
    PointSet,
    _as_point,
    coordinate_scale,
)

SIGN_TOL = 1e-9  # |lambda| at or below this reads as a zero sign; barycentric
                 # coordinates are already relative to the triangle's scale


@dataclass(frozen=True)
class Triangle:
    """Three non-collinear points, optionally tagged with source labels."""

    a: Point
    b: Point
    c: Point
    labels: tuple[int, int, int] = (1, 2, 3)

    def __post_init__(self):
        cross = (self.b.x - self.a.x) * (self.c.y - self.a.y) - (
            self.b.y - self.a.y
        ) * (self.c.x - self.a.x)
        if abs(cross) <= 1e-12 * self.diameter() ** 2:
            raise DegenerateTriangleError("triangle vertices are collinear")

    def vertices(self) -> tuple[Point, Point, Point]:
        return (self.a, self.b, self.c)

    def diameter(self) -> float:
        va, vb, vc = self.a, self.b, self.c
        return max(va.distance_to(vb), vb.distance_to(vc), vc.distance_to(va))


@dataclass(frozen=True)
class BarycentricCoords:
    """Affine weights over a triangle's vertices, summing to one."""

    l1: float
    l2: float
    l3: float

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.l1, self.l2, self.l3)


@dataclass(frozen=True)
class SignPattern:
    """Signs of the three barycentric weights; '0' marks a boundary weight."""

    signs: tuple[str, str, str]

    def __str__(self) -> str:
        return "".join(self.signs)

    @property
    def has_zero(self) -> bool:
        return "0" in self.signs


def _barycentric_rows(t: Triangle) -> tuple[tuple[float, float, float], ...]:
    """Coefficient rows r such that lambda_i = r[0]*x + r[1]*y + r[2].

    Closed-form inverse of the vertex system (two coordinate rows plus the
    row of ones); the third weight is eliminated as 1 - l1 - l2.
    """
    (x1, y1), (x2, y2), (x3, y3) = ((v.x, v.y) for v in t.vertices())
    det = (x1 - x3) * (y2 - y3) - (x2 - x3) * (y1 - y3)
    if det == 0.0:
        raise DegenerateTriangleError("triangle vertices are collinear")
    r1 = ((y2 - y3) / det, (x3 - x2) / det, (x2 * y3 - x3 * y2) / det)
    r2 = ((y3 - y1) / det, (x1 - x3) / det, (x3 * y1 - x1 * y3) / det)
    r3 = (-(r1[0] + r2[0]), -(r1[1] + r2[1]), 1.0 - (r1[2] + r2[2]))
    return (r1, r2, r3)


def barycentric_coords(t: Triangle, p: Point) -> BarycentricCoords:
    """Express a point as an affine combination of the triangle's vertices."""
    r1, r2, _ = _barycentric_rows(t)
    l1 = r1[0] * p.x + r1[1] * p.y + r1[2]
    l2 = r2[0] * p.x + r2[1] * p.y + r2[2]
    return BarycentricCoords(l1, l2, 1.0 - l1 - l2)


def sign_pattern(b: BarycentricCoords, tol: float = SIGN_TOL) -> SignPattern:
    """Map each weight to '+', '-', or '0' (within tol of zero)."""
    def sgn(v: float) -> str:
        if abs(v) <= tol:
            return "0"
        return "+" if v > 0 else "-"

    return SignPattern(tuple(sgn(v) for v in b.as_tuple()))


@dataclass(frozen=True)
class ConvexHull:
    """Counter-clockwise hull vertices; two (or one) for degenerate inputs."""

    vertices: tuple[Point, ...]

    def diameter(self) -> float:
        vs = self.vertices
        if len(vs) == 1:
            return 0.0
        return max(
            vs[i].distance_to(vs[j]) for i in range(len(vs)) for j in range(i)
        )


def _cross(o: Point, a: Point, b: Point) -> float:
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def convex_hull(points: Sequence[Point | Sequence[float]]) -> ConvexHull:
    """Monotone-chain hull keeping only strictly convex vertices.

    Collinear input degenerates to the two extreme points.
    """
    pts = [_as_point(p) for p in points]
    if len(pts) < 2:
        raise ShapeError(f"need at least 2 points for a hull, got {len(pts)}")
    unique = sorted(set((p.x, p.y) for p in pts))
    if len(unique) == 1:
        return ConvexHull((Point(*unique[0]),))
    ordered = [Point(x, y) for x, y in unique]

    def chain(seq: Iterable[Point]) -> list[Point]:
        out: list[Point] = []
        for p in seq:
            while len(out) >= 2 and _cross(out[-2], out[-1], p) <= 0.0:
                out.pop()
            out.append(p)
        return out

    lower = chain(ordered)
    upper = chain(reversed(ordered))
    return ConvexHull(tuple(lower[:-1] + upper[:-1]))


class HullLocation(Enum):
    INSIDE = "inside"
    ON_BOUNDARY = "boundary"
    OUTSIDE = "outside"


def point_in_hull(h: ConvexHull, p: Point, tol: float = SIGN_TOL) -> HullLocation:
    """Classify a point against a hull with a boundary band of tol x diameter."""
    vs = h.vertices
    if len(vs) == 1:
        v = vs[0]
        band = tol * max(1.0, abs(v.x), abs(v.y))
        return HullLocation.ON_BOUNDARY if p.distance_to(v) <= band else HullLocation.OUTSIDE
    band = tol * h.diameter()
    if len(vs) == 2:
        a, b = vs
        ab = (b.x - a.x, b.y - a.y)
        length = math.hypot(*ab)
        resid = abs(ab[0] * (p.y - a.y) - ab[1] * (p.x - a.x)) / length
        t = ((p.x - a.x) * ab[0] + (p.y - a.y) * ab[1]) / (length * length)
        if resid <= band and -tol <= t <= 1.0 + tol:
            return HullLocation.ON_BOUNDARY
        return HullLocation.OUTSIDE
    worst = math.inf
    for idx, a in enumerate(vs):
        b = vs[(idx + 1) % len(vs)]
        edge = math.hypot(b.x - a.x, b.y - a.y)
        signed = ((b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x)) / edge
        worst = min(worst, signed)
    if worst > band:
        return HullLocation.INSIDE
    if worst >= -band:
        return HullLocation.ON_BOUNDARY
    return HullLocation.OUTSIDE


# --------------------------------------------------------------------------
# Sweep machinery
# --------------------------------------------------------------------------

AT_INFINITY = "at-infinity"

FOUR_POINT_ALLOWED = {
    0: ("+++",),
    1: ("+--", "-++"),
    2: ("++-", "--+"),
    3: ("+++",),
}
FORBIDDEN_PATTERNS = ("+-+", "-+-")


@dataclass(frozen=True)
class LabelTally:
    """Classification counts for one label over a sweep."""

    label: int
    counts: Mapping[str, int]
    at_infinity: int


@dataclass(frozen=True)
class Violation:
    label: int
    repetitions: tuple[int, ...]
    classification: str
    pivot: tuple[float, float]
    reason: str


@dataclass(frozen=True)
class RegionReport:
    """Aggregated outcome of a repetition sweep."""

    check: str
    k_max: int
    combination_count: int
    tallies: tuple[LabelTally, ...]
    violations: tuple[Violation, ...]

    @property
    def passed(self) -> bool:
        return not self.violations

    def tally(self, label: int) -> LabelTally:
        for t in self.tallies:
            if t.label == label:
                return t
        raise KeyError(label)

    def to_json_dict(self) -> dict:
        return {
            "check": self.check,
            "k_max": self.k_max,
            "combinations": self.combination_count,
            "passed": self.passed,
            "labels": [
                {
                    "label": t.label,
                    "counts": {k: t.counts[k] for k in sorted(t.counts)},
                    "at_infinity": t.at_infinity,
                }
                for t in self.tallies
            ],
            "violations": [
                {
                    "label": v.label,
                    "repetitions": list(v.repetitions),
                    "classification": v.classification,
                    "pivot": list(v.pivot),
                    "reason": v.reason,
                }
                for v in self.violations
            ],
        }


def _repetition_grid(k_max: int, m: int) -> np.ndarray:
    """All m-tuples over {0..k_max} in lexicographic order, shape (C, m)."""
    if k_max < 0:
        raise ValueError("k_max must be >= 0")
    axes = [np.arange(k_max + 1)] * m
    mesh = np.meshgrid(*axes, indexing="ij")
    return np.stack(mesh, axis=-1).reshape(-1, m)


def _pivot_grid(
    xs: np.ndarray, ys: np.ndarray, idx: int, deltas: np.ndarray
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Weighted pivots of one label over a (C, n) grid of multiplicities.

    Returns (px, py, finite); px/py are meaningless where finite is False.
    """
    chi = xs - xs[idx]
    gam = ys - ys[idx]
    den = deltas @ chi
    threshold = AT_INFINITY_REL_TOL * np.abs(chi).max() * deltas.sum(axis=1)
    finite = np.abs(den) > threshold
    safe = np.where(finite, den, 1.0)
    px = xs[idx] + (deltas @ (chi * chi)) / safe
    py = ys[idx] + (deltas @ (chi * gam)) / safe
    return px, py, finite


def _sign_codes(lams: np.ndarray, tol: float) -> np.ndarray:
    """(C, 3) lambda values -> (C, 3) codes in {-1, 0, +1}."""
    return np.where(np.abs(lams) <= tol, 0, np.where(lams > 0, 1, -1)).astype(np.int8)


_SIGN_CHAR = {-1: "-", 0: "0", 1: "+"}


def _codes_to_strings(codes: np.ndarray) -> list[str]:
    return ["".join(_SIGN_CHAR[int(c)] for c in row) for row in codes]


def _pack_codes(codes: np.ndarray) -> np.ndarray:
    """(C, 3) sign codes -> base-3 integers for cheap bulk counting."""
    return (codes[:, 0] + 1) * 9 + (codes[:, 1] + 1) * 3 + (codes[:, 2] + 1)


def _unpack_code(packed: int) -> str:
    digits = (packed // 9, (packed // 3) % 3, packed % 3)
    return "".join(_SIGN_CHAR[d - 1] for d in digits)


def _count_packed(packed: np.ndarray, finite: np.ndarray) -> dict[str, int]:
    uniq, cnt = np.unique(packed[finite], return_counts=True)
    return {_unpack_code(int(u)): int(c) for u, c in zip(uniq, cnt)}


def _matches_allowed(codes: np.ndarray, allowed: Sequence[str]) -> np.ndarray:
    """True where the sign row equals an allowed pattern, zeros acting as wildcards."""
    ok = np.zeros(len(codes), dtype=bool)
    for pattern in allowed:
        want = np.array([1 if ch == "+" else -1 for ch in pattern], dtype=np.int8)
        ok |= ((codes == want) | (codes == 0)).all(axis=1)
    return ok


def _require_sorted_x(s: PointSet, strict: bool) -> None:
    xs = s.xs()
    for a, b in zip(xs, xs[1:]):
        if (b < a) if not strict else (b <= a):
            kind = "strictly increasing" if strict else "non-decreasing"
            raise ShapeError(f"point x values must be {kind}, got {xs}")


def four_point_region_sweep(s: PointSet, k_max: int, tol: float = SIGN_TOL) -> RegionReport:
    """Classify all four labels' pivots over every repetition combination.

    Requires exactly four points ordered by x (ties allowed). Each pivot is
    checked against the triangle of the other three points; see the module
    docstring for the admissible regions per label.
    """
    if len(s) != 4:
        raise ShapeError(f"four-point sweep needs exactly 4 points, got {len(s)}")
    _require_sorted_x(s, strict=False)
    xs = np.array(s.xs())
    ys = np.array(s.ys())
    kgrid = _repetition_grid(k_max, 4)
    deltas = (kgrid + 1).astype(float)

    tallies = []
    violations: list[Violation] = []
    for pos in range(4):
        px, py, finite = _pivot_grid(xs, ys, pos, deltas)
        others = [j for j in range(4) if j != pos]
        tri = Triangle(
            *(s.points[j] for j in others), labels=tuple(j + 1 for j in others)
        )
        rows = np.array(_barycentric_rows(tri))
        lams = np.stack([px, py, np.ones_like(px)], axis=1) @ rows.T
        codes = _sign_codes(lams, tol)
        ok = _matches_allowed(codes, FOUR_POINT_ALLOWED[pos])

        counts = _count_packed(_pack_codes(codes), finite)
        tallies.append(LabelTally(pos + 1, counts, int((~finite).sum())))

        for combo_idx in np.nonzero(finite & ~ok)[0]:
            pat = "".join(_SIGN_CHAR[int(c)] for c in codes[combo_idx])
            reason = (
                "forbidden alternating region"
                if pat in FORBIDDEN_PATTERNS
                else "outside the admissible regions for this label"
            )
            violations.append(
                Violation(
                    label=pos + 1,
                    repetitions=tuple(int(k) for k in kgrid[combo_idx]),
                    classification=pat,
                    pivot=(float(px[combo_idx]), float(py[combo_idx])),
                    reason=reason,
                )
            )

    violations.sort(key=lambda v: (v.repetitions, v.label))
    return RegionReport(
        check="four-point-regions",
        k_max=k_max,
        combination_count=len(kgrid),
        tallies=tuple(tallies),
        violations=tuple(violations),
    )


ON_SEGMENT = "on-segment"
OFF_SEGMENT = "off-segment"
OUTSIDE_SEGMENT = "outside-segment"
INSIDE_SEGMENT = "inside-segment"
SEGMENT_ENDPOINT = "segment-endpoint"
OFF_LINE = "off-line"


def _segment_classes(
    s: PointSet,
    pos: int,
    px: np.ndarray,
    py: np.ndarray,
    finite: np.ndarray,
    tol: float,
) -> tuple[list[str], np.ndarray]:
    """Classify one label's pivots against the segment through the other two points.

    Returns per-combination class strings and a violation mask. The line
    residual is compared against tol times the larger of the data scale and
    the pivot's own displacement, since near-at-infinity pivots carry
    magnitude-proportional rounding.
    """
    others = [j for j in range(3) if j != pos]
    a = s.points[others[0]]
    b = s.points[others[1]]
    abx, aby = b.x - a.x, b.y - a.y
    seg_len2 = abx * abx + aby * aby
    seg_len = math.sqrt(seg_len2)
    scale = max(coordinate_scale(s), seg_len)

    t = ((px - a.x) * abx + (py - a.y) * aby) / seg_len2
    resid = np.abs(abx * (py - a.y) - aby * (px - a.x)) / seg_len
    ref = np.maximum(scale, np.hypot(px - a.x, py - a.y))
    on_line = resid <= tol * ref

    outer = pos in (0, 2)
    classes: list[str] = []
    bad = np.zeros(len(px), dtype=bool)
    for j in range(len(px)):
        if not finite[j]:
            classes.append(AT_INFINITY)
            continue
        if not on_line[j]:
            classes.append(OFF_LINE)
            bad[j] = True
            continue
        tj = t[j]
        if outer:
            if -tol <= tj <= 1.0 + tol:
                classes.append(ON_SEGMENT)
            else:
                classes.append(OFF_SEGMENT)
                bad[j] = True
        else:
            if abs(tj) <= tol or abs(tj - 1.0) <= tol:
                classes.append(SEGMENT_ENDPOINT)
            elif tj < -tol or tj > 1.0 + tol:
                classes.append(OUTSIDE_SEGMENT)
            else:
                classes.append(INSIDE_SEGMENT)
                bad[j] = True
    return classes, bad


def three_point_line_check(s: PointSet, k_max: int, tol: float = SIGN_TOL) -> RegionReport:
    """Check pivots of a strictly x-ordered 3-point set against the opposite segment.

    Outer labels must land on the segment between the other two points; the
    inner label must land on that line but off the segment. Works for
    collinear data too, where all pivots stay on the common line.
    """
    if len(s) != 3:
        raise ShapeError(f"three-point check needs exactly 3 points, got {len(s)}")
    _require_sorted_x(s, strict=True)
    xs = np.array(s.xs())
    ys = np.array(s.ys())
    kgrid = _repetition_grid(k_max, 3)
    deltas = (kgrid + 1).astype(float)

    tallies = []
    violations: list[Violation] = []
    for pos in range(3):
        px, py, finite = _pivot_grid(xs, ys, pos, deltas)
        classes, bad = _segment_classes(s, pos, px, py, finite, tol)
        counts: dict[str, int] = {}
        for c, cls in zip(finite, classes):
            if c:
                counts[cls] = counts.get(cls, 0) + 1
        tallies.append(LabelTally(pos + 1, counts, int((~finite).sum())))
        for combo_idx in np.nonzero(bad)[0]:
            violations.append(
                Violation(
                    label=pos + 1,
                    repetitions=tuple(int(k) for k in kgrid[combo_idx]),
                    classification=classes[combo_idx],
                    pivot=(float(px[combo_idx]), float(py[combo_idx])),
                    reason="outer pivots belong on the segment; inner pivots off it",
                )
            )

    violations.sort(key=lambda v: (v.repetitions, v.label))
    return RegionReport(
        check="three-point-line",
        k_max=k_max,
        combination_count=len(kgrid),
        tallies=tuple(tallies),
        violations=tuple(violations),
    )


def extreme_labels(s: PointSet) -> tuple[int, ...]:
    """All labels tied for the minimum x, then all tied for the maximum x."""
    xs = s.xs()
    lo, hi = min(xs), max(xs)
    mins = [j + 1 for j, x in enumerate(xs) if x == lo]
    maxs = [j + 1 for j, x in enumerate(xs) if x == hi and x != lo]
    return tuple(mins + maxs)


_HULL_CLASS_NAMES = (
    HullLocation.INSIDE.value,
    HullLocation.ON_BOUNDARY.value,
    HullLocation.OUTSIDE.value,
    AT_INFINITY,
)
_HULL_AT_INFINITY_CODE = 3
_HULL_OUTSIDE_CODE = 2


def _hull_class_codes(
    hull: ConvexHull, px: np.ndarray, py: np.ndarray, finite: np.ndarray, tol: float
) -> np.ndarray:
    """Classify pivots against a hull: (C,) codes indexing _HULL_CLASS_NAMES."""
    vs = hull.vertices
    codes = np.full(len(px), _HULL_AT_INFINITY_CODE, dtype=np.int8)
    if len(vs) < 3:
        for j in np.nonzero(finite)[0]:
            loc = point_in_hull(hull, Point(float(px[j]), float(py[j])), tol)
            codes[j] = _HULL_CLASS_NAMES.index(loc.value)
        return codes
    band = tol * hull.diameter()
    worst = np.full(len(px), np.inf)
    for idx, a in enumerate(vs):
        b = vs[(idx + 1) % len(vs)]
        edge = math.hypot(b.x - a.x, b.y - a.y)
        signed = ((b.x - a.x) * (py - a.y) - (b.y - a.y) * (px - a.x)) / edge
        worst = np.minimum(worst, signed)
    codes[finite] = np.where(
        worst[finite] > band, 0, np.where(worst[finite] >= -band, 1, 2)
    ).astype(np.int8)
    return codes


def _count_hull_codes(codes: np.ndarray) -> dict[str, int]:
    uniq, cnt = np.unique(codes[codes != _HULL_AT_INFINITY_CODE], return_counts=True)
    return {_HULL_CLASS_NAMES[int(u)]: int(c) for u, c in zip(uniq, cnt)}


def hull_bound_check(s: PointSet, k_max: int, tol: float = SIGN_TOL) -> RegionReport:
    """Check extreme-x labels' pivots against the hull of the other n-1 points.

    Repetition combinations range over the non-corresponding points only; the
    extreme label's own count never moves its pivot. Labels tied for an
    extreme are all checked.
    """
    if len(s) < 4:
        raise ShapeError(f"hull bound check needs at least 4 points, got {len(s)}")
    xs = np.array(s.xs())
    ys = np.array(s.ys())
    n = len(s)
    kgrid = _repetition_grid(k_max, n - 1)

    tallies = []
    violations: list[Violation] = []
    for label in extreme_labels(s):
        pos = label - 1
        others = [j for j in range(n) if j != pos]
        hull = convex_hull([s.points[j] for j in others])
        deltas = np.ones((len(kgrid), n))
        deltas[:, others] = kgrid + 1
        px, py, finite = _pivot_grid(xs, ys, pos, deltas)
        codes = _hull_class_codes(hull, px, py, finite, tol)
        tallies.append(LabelTally(label, _count_hull_codes(codes), int((~finite).sum())))
        for combo_idx in np.nonzero(codes == _HULL_OUTSIDE_CODE)[0]:
            reps = [0] * n
            for col, j in enumerate(others):
                reps[j] = int(kgrid[combo_idx][col])
            violations.append(
                Violation(
                    label=label,
                    repetitions=tuple(reps),
                    classification=HullLocation.OUTSIDE.value,
                    pivot=(float(px[combo_idx]), float(py[combo_idx])),
                    reason="extreme-label pivot escaped the hull of the other points",
                )
            )

    violations.sort(key=lambda v: (v.repetitions, v.label))
    return RegionReport(
        check="hull-bound",
        k_max=k_max,
        combination_count=len(kgrid),
        tallies=tuple(tallies),
        violations=tuple(violations),
    )


@dataclass(frozen=True)
class SweepRecord:
    """One classified pivot of one label at one repetition combination."""

    repetitions: tuple[int, ...]
    label: int
    pivot: tuple[float, float] | None  # None when at infinity
    classification: str


def iter_sweep_records(
    s: PointSet, k_max: int, hull: bool = False, tol: float = SIGN_TOL
) -> Iterator[SweepRecord]:
    """Per-combination records in (k-vector, label) order, for CSV emission.

    Region mode supports 3- and 4-point sets; hull mode supports any n >= 3
    (for n = 3 the hull of the other two points is their segment) and reports
    only the extreme-x labels.
    """
    xs = np.array(s.xs())
    ys = np.array(s.ys())
    n = len(s)
    if hull:
        if n < 3:
            raise ShapeError(f"hull sweep needs at least 3 points, got {n}")
        kgrid = _repetition_grid(k_max, n - 1)
        records = []
        for label in extreme_labels(s):
            pos = label - 1
            others = [j for j in range(n) if j != pos]
            hull_obj = convex_hull([s.points[j] for j in others])
            deltas = np.ones((len(kgrid), n))
            deltas[:, others] = kgrid + 1
            px, py, finite = _pivot_grid(xs, ys, pos, deltas)
            codes = _hull_class_codes(hull_obj, px, py, finite, tol)
            for j, row in enumerate(kgrid):
                reps = [0] * n
                for col, other in enumerate(others):
                    reps[other] = int(row[col])
                pivot = (float(px[j]), float(py[j])) if finite[j] else None
                records.append(
                    SweepRecord(tuple(reps), label, pivot, _HULL_CLASS_NAMES[codes[j]])
                )
        records.sort(key=lambda r: (r.repetitions, r.label))
        yield from records
        return

    if n == 4:
        _require_sorted_x(s, strict=False)
        kgrid = _repetition_grid(k_max, 4)
        deltas = (kgrid + 1).astype(float)
        columns = []
        for pos in range(4):
            px, py, finite = _pivot_grid(xs, ys, pos, deltas)
            others = [j for j in range(4) if j != pos]
            tri = Triangle(
                *(s.points[j] for j in others), labels=tuple(j + 1 for j in others)
            )
            rows = np.array(_barycentric_rows(tri))
            lams = np.stack([px, py, np.ones_like(px)], axis=1) @ rows.T
            patterns = _codes_to_strings(_sign_codes(lams, tol))
            columns.append((px, py, finite, patterns))
    elif n == 3:
        _require_sorted_x(s, strict=True)
        kgrid = _repetition_grid(k_max, 3)
        deltas = (kgrid + 1).astype(float)
        columns = []
        for pos in range(3):
            px, py, finite = _pivot_grid(xs, ys, pos, deltas)
            classes, _ = _segment_classes(s, pos, px, py, finite, tol)
            columns.append((px, py, finite, classes))
    else:
        raise ShapeError(f"region sweep supports 3 or 4 points, got {n}")

    for j in range(len(kgrid)):
        reps = tuple(int(k) for k in kgrid[j])
        for pos, (px, py, finite, classes) in enumerate(columns):
            pivot = (float(px[j]), float(py[j])) if finite[j] else None
            cls = classes[j] if finite[j] else AT_INFINITY
            yield SweepRecord(reps, pos + 1, pivot, cls)

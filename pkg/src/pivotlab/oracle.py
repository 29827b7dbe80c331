"""Brute-force ground truth for the weighted machinery.

Multiplicities are expanded into literal repeated rows and fitted through the
raw 2x2 normal equations, giving an independent reference implementation: the
weighted fit must match it, pivots must sit on every such line as one point's
repetition count grows, and the pivots of the non-repeated points must drift
into the repeated point as its count diverges.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import DegenerateXError, LabelError, ShapeError
from .geometry import (
    DEGENERATE_X_REL_TOL,
    Multiplicities,
    PointSet,
    RegressionLine,
    coordinate_scale,
    pivot_point,
    pivot_point_weighted,
)


@dataclass(frozen=True)
class ExpandedSystem:
    """Literal design rows (x, 1) and observations y of the repeated system."""

    rows: tuple[tuple[float, float], ...]
    y: tuple[float, ...]

    def __len__(self) -> int:
        return len(self.rows)


def expand_multiplicities(s: PointSet, d: Multiplicities) -> ExpandedSystem:
    """Write out point j as delta_j identical rows, ordered by label then copy."""
    if len(d) != len(s):
        raise ShapeError(f"got {len(d)} multiplicities for {len(s)} points")
    rows = []
    obs = []
    for p, delta in zip(s.points, d.delta):
        for _ in range(delta):
            rows.append((p.x, 1.0))
            obs.append(p.y)
    return ExpandedSystem(tuple(rows), tuple(obs))


def fit_expanded(e: ExpandedSystem) -> RegressionLine:
    """Solve the normal equations of the expanded system row by row."""
    n = float(len(e.rows))
    sx = sy = sxx = sxy = 0.0
    xscale = 0.0
    for (x, _), y in zip(e.rows, e.y):
        sx += x
        sy += y
        sxx += x * x
        sxy += x * y
        xscale = max(xscale, abs(x))
    variance = sxx - sx * sx / n
    if variance <= n * (DEGENERATE_X_REL_TOL * xscale) ** 2:
        raise DegenerateXError("expanded rows have (numerically) equal x values")
    m = (n * sxy - sx * sy) / (n * sxx - sx * sx)
    b = (sy - m * sx) / n
    sse = 0.0
    for (x, _), y in zip(e.rows, e.y):
        r = m * x + b - y
        sse += r * r
    return RegressionLine(m, b, sse)


@dataclass(frozen=True)
class InvarianceReport:
    """Distances from one pivot to the expanded-system fits as k grows."""

    label: int
    k_values: tuple[int, ...]
    distances: tuple[float, ...]
    max_distance: float
    tol: float
    scale: float
    status: str  # "pass" | "fail" | "not-applicable"

    @property
    def passed(self) -> bool:
        return self.status != "fail"


def verify_pivot_invariance(s: PointSet, i: int, k_max: int, tol: float = 1e-9) -> InvarianceReport:
    """Check that the label-i pivot stays on every fit as S_i is repeated 0..k_max times.

    An at-infinity pivot makes the check inapplicable rather than failed.
    """
    if k_max < 0:
        raise ValueError("k_max must be >= 0")
    pr = pivot_point(s, i)
    scale = coordinate_scale(s)
    if not pr.is_finite:
        return InvarianceReport(i, (), (), 0.0, tol, scale, "not-applicable")
    idx = s.index(i)
    ks = []
    distances = []
    for k in range(k_max + 1):
        delta = [1] * len(s)
        delta[idx] = k + 1
        line = fit_expanded(expand_multiplicities(s, Multiplicities(delta)))
        ks.append(k)
        distances.append(line.distance_to(pr.point))
    worst = max(distances)
    status = "pass" if worst <= tol * scale else "fail"
    return InvarianceReport(i, tuple(ks), tuple(distances), worst, tol, scale, status)


@dataclass(frozen=True)
class ConvergenceReport:
    """Distances from a probe label's pivot to the repeated point along a k schedule.

    fitted_constant estimates the 1/k decay constant from the non-final
    schedule entries; the final distance must stay within 1.5x of that decay,
    and within 1e-5 of the coordinate scale once k reaches 10^6.
    """

    repeated_label: int
    probe_label: int
    schedule: tuple[int, ...]
    distances: tuple[float | None, ...]  # None where the pivot is at infinity
    scale: float
    fitted_constant: float | None
    decay_ok: bool
    limit_ok: bool
    tail_decreasing: bool

    @property
    def final_distance(self) -> float | None:
        return self.distances[-1] if self.distances else None

    @property
    def passed(self) -> bool:
        return self.final_distance is not None and self.decay_ok and self.limit_ok


LIMIT_K = 10**6
LIMIT_REL_TOL = 1e-5
DECAY_SLACK = 1.5
NOISE_REL_TOL = 1e-12  # distances at the rounding floor carry no decay signal


def verify_convergence(
    s: PointSet, r: int, i: int, k_schedule: Sequence[int]
) -> ConvergenceReport:
    """Track the label-i pivot toward the repeated point S_r along a repetition schedule."""
    if s.index(r) == s.index(i):
        raise LabelError("repeated and probe labels must differ")
    if not k_schedule:
        raise ShapeError("schedule must contain at least one repetition count")
    target = s.point(r)
    ridx = s.index(r)
    scale = coordinate_scale(s)
    distances: list[float | None] = []
    for k in k_schedule:
        delta = [1] * len(s)
        delta[ridx] = int(k) + 1
        pr = pivot_point_weighted(s, i, Multiplicities(delta))
        distances.append(pr.point.distance_to(target) if pr.is_finite else None)

    schedule = tuple(int(k) for k in k_schedule)
    # Decay constant from all non-final entries with k > 0 and a finite pivot.
    scaled = [
        d * k for k, d in zip(schedule[:-1], distances[:-1]) if k > 0 and d is not None
    ]
    fitted = max(scaled) if scaled else None
    final = distances[-1]
    k_final = schedule[-1]
    if final is None:
        decay_ok = limit_ok = False
    else:
        decay_ok = (
            final <= NOISE_REL_TOL * scale
            or fitted is None
            or k_final == 0
            or final * k_final <= DECAY_SLACK * fitted
        )
        limit_ok = k_final < LIMIT_K or final <= LIMIT_REL_TOL * scale

    finite = [d for d in distances if d is not None]
    tail = finite[len(finite) // 2 :]
    tail_decreasing = all(b <= a for a, b in zip(tail, tail[1:]))

    return ConvergenceReport(
        repeated_label=r,
        probe_label=i,
        schedule=schedule,
        distances=tuple(distances),
        scale=scale,
        fitted_constant=fitted,
        decay_ok=decay_ok,
        limit_ok=limit_ok,
        tail_decreasing=tail_decreasing,
    )


def farthest_probe_label(s: PointSet, r: int) -> int:
    """The non-repeated label displaced farthest in x from label r.

    Its pivot has the farthest to travel, and the dominance of the repeated
    term in its pivot formula makes the 1/k convergence constant smallest
    relative to the data; this is the canonical probe for convergence checks.
    """
    target = s.point(r)
    ridx = s.index(r)
    best = None
    best_gap = -math.inf
    for label in s.labels:
        if label - 1 == ridx:
            continue
        gap = abs(s.point(label).x - target.x)
        if gap > best_gap:
            best = label
            best_gap = gap
    return best

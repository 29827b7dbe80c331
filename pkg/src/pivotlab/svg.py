"""Minimal deterministic SVG scatter output.

Fixed 800x600 viewport, axes scaled to the data bounding box plus a 5%
margin, one circle per marker, colors cycling per source label. No external
plotting dependency; output bytes depend only on the input data.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

WIDTH = 800
HEIGHT = 600
MARGIN_FRAC = 0.05

PALETTE = (
    "#1f77b4",
    "#ff7f0e",
    "#2ca02c",
    "#d62728",
    "#9467bd",
    "#8c564b",
    "#e377c2",
    "#7f7f7f",
)


def label_color(label: int) -> str:
    return PALETTE[(label - 1) % len(PALETTE)]


@dataclass(frozen=True)
class Marker:
    x: float
    y: float
    color: str
    radius: float = 2.0


@dataclass(frozen=True)
class Polyline:
    points: tuple[tuple[float, float], ...]
    color: str


def _fmt(v: float) -> str:
    return f"{v:.3f}"


class _Projection:
    def __init__(self, xs: Sequence[float], ys: Sequence[float]):
        xmin, xmax = min(xs), max(xs)
        ymin, ymax = min(ys), max(ys)
        xpad = (xmax - xmin) * MARGIN_FRAC or 1.0
        ypad = (ymax - ymin) * MARGIN_FRAC or 1.0
        self.xmin, self.xmax = xmin - xpad, xmax + xpad
        self.ymin, self.ymax = ymin - ypad, ymax + ypad

    def to_px(self, x: float, y: float) -> tuple[float, float]:
        sx = (x - self.xmin) / (self.xmax - self.xmin) * WIDTH
        sy = HEIGHT - (y - self.ymin) / (self.ymax - self.ymin) * HEIGHT
        return sx, sy


def render_scatter(
    markers: Iterable[Marker],
    lines: Iterable[Polyline] = (),
) -> str:
    """Render markers and polylines into a standalone SVG document."""
    markers = list(markers)
    lines = list(lines)
    xs = [m.x for m in markers] + [p[0] for ln in lines for p in ln.points]
    ys = [m.y for m in markers] + [p[1] for ln in lines for p in ln.points]
    if not xs:
        xs, ys = [0.0], [0.0]
    proj = _Projection(xs, ys)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
    ]
    for ln in lines:
        coords = " ".join(
            f"{_fmt(px)},{_fmt(py)}" for px, py in (proj.to_px(*p) for p in ln.points)
        )
        parts.append(
            f'<polyline points="{coords}" fill="none" stroke="{ln.color}" stroke-width="1"/>'
        )
    for m in markers:
        px, py = proj.to_px(m.x, m.y)
        parts.append(
            f'<circle cx="{_fmt(px)}" cy="{_fmt(py)}" r="{_fmt(m.radius)}" fill="{m.color}"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"

"""File formats: point files in, sweep/trace CSV out.

All emitted numbers use a fixed locale-independent format (ten decimal
places, trailing zeros stripped) so identical inputs always produce byte
identical output, and re-reading emitted CSV reproduces the same records.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, TextIO

from .dynamics import IterationTrace
from .errors import FormatError, ShapeError
from .geometry import Multiplicities, PointSet
from .regions import AT_INFINITY, SweepRecord

INF = "inf"


def format_number(v: float) -> str:
    """Fixed decimal rendering: ten places, trailing zeros stripped, no '-0'."""
    if math.isinf(v):
        return INF if v > 0 else "-" + INF
    s = f"{v:.10f}"
    s = s.rstrip("0").rstrip(".")
    if s in ("-0", ""):
        return "0"
    return s


def format_scalar(v) -> str:
    """Exact rationals as num/den strings, floats via format_number."""
    if isinstance(v, Fraction):
        return str(v)
    return format_number(v)


def load_points(path: str | Path) -> tuple[PointSet, Multiplicities | None]:
    """Read a point file; the extension picks the format (.json, else CSV).

    CSV holds one "x,y" pair per line with an optional "x,y" header. JSON
    holds {"points": [[x, y], ...]} plus an optional "delta" weight list.
    """
    path = Path(path)
    if path.suffix.lower() == ".json":
        return _load_json(path)
    return _load_csv(path)


def _load_csv(path: Path) -> tuple[PointSet, None]:
    pairs = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            if lineno == 1 and line.lower().replace(" ", "") == "x,y":
                continue
            cells = line.split(",")
            if len(cells) != 2:
                raise FormatError(f"{path}:{lineno}: expected two comma-separated values")
            try:
                x, y = float(cells[0]), float(cells[1])
            except ValueError:
                raise FormatError(f"{path}:{lineno}: could not parse {line!r} as numbers") from None
            if not (math.isfinite(x) and math.isfinite(y)):
                raise FormatError(f"{path}:{lineno}: coordinates must be finite")
            pairs.append((x, y))
    if len(pairs) < 2:
        raise ShapeError(f"{path}: need at least 2 points, got {len(pairs)}")
    return PointSet(pairs), None


def _load_json(path: Path) -> tuple[PointSet, Multiplicities | None]:
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError(f"{path}:{exc.lineno}: invalid JSON ({exc.msg})") from None
    if not isinstance(data, dict) or "points" not in data:
        raise FormatError(f"{path}: expected an object with a 'points' array")
    raw_points = data["points"]
    if not isinstance(raw_points, list):
        raise FormatError(f"{path}: 'points' must be an array of [x, y] pairs")
    pairs = []
    for idx, entry in enumerate(raw_points):
        if not (isinstance(entry, (list, tuple)) and len(entry) == 2):
            raise FormatError(f"{path}: points[{idx}] is not an [x, y] pair")
        try:
            x, y = float(entry[0]), float(entry[1])
        except (TypeError, ValueError):
            raise FormatError(f"{path}: points[{idx}] is not numeric") from None
        if not (math.isfinite(x) and math.isfinite(y)):
            raise FormatError(f"{path}: points[{idx}] must be finite")
        pairs.append((x, y))
    if len(pairs) < 2:
        raise ShapeError(f"{path}: need at least 2 points, got {len(pairs)}")
    points = PointSet(pairs)
    delta = None
    if data.get("delta") is not None:
        raw_delta = data["delta"]
        if not isinstance(raw_delta, list):
            raise FormatError(f"{path}: 'delta' must be an array of integers")
        try:
            delta = Multiplicities(raw_delta)
        except ValueError as exc:
            raise FormatError(f"{path}: {exc}") from None
        if len(delta) != len(points):
            raise ShapeError(
                f"{path}: got {len(delta)} multiplicities for {len(points)} points"
            )
    return points, delta


# --------------------------------------------------------------------------
# Sweep CSV
# --------------------------------------------------------------------------


def sweep_header(n: int) -> str:
    return ",".join([f"k{j}" for j in range(1, n + 1)] + ["label", "x", "y", "region"])


def sweep_row(record: SweepRecord) -> str:
    ks = ",".join(str(k) for k in record.repetitions)
    if record.pivot is None:
        return f"{ks},{record.label},{INF},{INF},{AT_INFINITY}"
    x, y = record.pivot
    return f"{ks},{record.label},{format_number(x)},{format_number(y)},{record.classification}"


def write_sweep_csv(out: TextIO, records: Iterable[SweepRecord], n: int) -> int:
    """Emit header plus one row per record; returns the row count."""
    out.write(sweep_header(n) + "\n")
    count = 0
    for rec in records:
        out.write(sweep_row(rec) + "\n")
        count += 1
    return count


def read_sweep_csv(path: str | Path) -> list[SweepRecord]:
    path = Path(path)
    records = []
    with open(path, encoding="utf-8") as fh:
        header = fh.readline().strip()
        cols = header.split(",")
        if cols[-4:] != ["label", "x", "y", "region"] or not all(
            c == f"k{j}" for j, c in enumerate(cols[:-4], start=1)
        ):
            raise FormatError(f"{path}:1: unrecognized sweep header {header!r}")
        n = len(cols) - 4
        for lineno, raw in enumerate(fh, start=2):
            line = raw.strip()
            if not line:
                continue
            cells = line.split(",")
            if len(cells) != n + 4:
                raise FormatError(f"{path}:{lineno}: expected {n + 4} cells")
            try:
                reps = tuple(int(c) for c in cells[:n])
                label = int(cells[n])
            except ValueError:
                raise FormatError(f"{path}:{lineno}: bad repetition or label value") from None
            if cells[n + 1] == INF:
                pivot = None
            else:
                try:
                    pivot = (float(cells[n + 1]), float(cells[n + 2]))
                except ValueError:
                    raise FormatError(f"{path}:{lineno}: bad pivot coordinates") from None
            records.append(SweepRecord(reps, label, pivot, cells[n + 3]))
    return records


# --------------------------------------------------------------------------
# Iteration trace CSV
# --------------------------------------------------------------------------

TRACE_HEADER = "n,a,b,c,range,permutation,mode"


def trace_rows(trace: IterationTrace) -> list[str]:
    rows = []
    for n, state in enumerate(trace.states):
        mode = "exact" if state.exact else "float"
        vals = ",".join(format_scalar(v) for v in state.values)
        rows.append(
            f"{n},{vals},{format_scalar(state.range)},{state.order_permutation()},{mode}"
        )
    return rows


def write_trace_csv(out: TextIO, trace: IterationTrace) -> None:
    out.write(TRACE_HEADER + "\n")
    for row in trace_rows(trace):
        out.write(row + "\n")

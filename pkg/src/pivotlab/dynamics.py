"""Iterated pseudopivoting of collinear triples.

When all data sit on one line the pivot formulas still produce coordinates,
and feeding those back in defines a discrete dynamical system on scalar
triples. Each value maps to its displacement-ratio pivot; a value equal to
the average of the other two has a vanishing denominator and sends the system
to infinity. Whether the inner value sits above or below that average decides
if its image becomes the next minimum or maximum, so the averages act as
bifurcation thresholds.

The map is rational, so rational inputs stay rational: exact mode (Fraction
arithmetic) is the authority for every dynamics claim, while floating mode
exists for speed and plotting. In floating mode each value is computed with
exactly the same displacement arithmetic as the planar pivot formula, so a
triple embedded on a horizontal line reproduces this map bit for bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import DegenerateStateError, ShapeError

Scalar = Fraction | float

LABELS = ("a", "b", "c")

# Floating-mode zero tests are relative to the triple's range.
FLOAT_REL_TOL = 1e-12

# Exact-mode iteration aborts once numerator or denominator bits exceed this.
MAX_BITS = 10**6

COMPLETED = "completed"
DIVERGED = "diverged"
DIGITS_EXCEEDED = "digits-exceeded"


def _to_fraction(v) -> Fraction:
    # floats go through str() so that "0.01" means 1/100, not its binary neighbor
    if isinstance(v, float):
        return Fraction(str(v))
    return Fraction(v)


@dataclass(frozen=True)
class PseudopivotState:
    """A labeled triple (a, b, c) in floating or exact-rational representation."""

    values: tuple[Scalar, Scalar, Scalar]
    exact: bool

    @classmethod
    def floating(cls, a: float, b: float, c: float) -> PseudopivotState:
        return cls((float(a), float(b), float(c)), exact=False)

    @classmethod
    def exact_rational(cls, a, b, c) -> PseudopivotState:
        return cls(tuple(_to_fraction(v) for v in (a, b, c)), exact=True)

    @property
    def range(self) -> Scalar:
        return max(self.values) - min(self.values)

    def order_permutation(self) -> str:
        """Labels sorted by ascending value, e.g. 'cab' when c < a < b."""
        order = sorted(range(3), key=lambda j: (self.values[j], j))
        return "".join(LABELS[j] for j in order)

    def max_bits(self) -> int:
        if not self.exact:
            return 0
        return max(
            max(v.numerator.bit_length(), v.denominator.bit_length())
            for v in self.values
        )


def _denominators(state: PseudopivotState) -> tuple[Scalar, Scalar, Scalar]:
    a, b, c = state.values
    return (b + c - 2 * a, a + c - 2 * b, a + b - 2 * c)


def _vanishes(state: PseudopivotState, den: Scalar) -> bool:
    if state.exact:
        return den == 0
    return abs(den) <= FLOAT_REL_TOL * float(state.range)


def divergent_labels(state: PseudopivotState) -> tuple[str, ...]:
    """Labels whose next value has a vanishing denominator."""
    return tuple(
        LABELS[j] for j, den in enumerate(_denominators(state)) if _vanishes(state, den)
    )


def pseudopivot_step(state: PseudopivotState) -> PseudopivotState | None:
    """One application of the map, or None if any denominator vanishes.

    Each value moves to value + sum(chi^2)/sum(chi) over its displacements
    chi to the triple; in floating mode this uses exactly the planar pivot
    abscissa arithmetic, in exact mode an equivalent integer form.
    """
    if state.exact:
        return _step_exact(state)
    return _step_float(state)


def _step_float(state: PseudopivotState) -> PseudopivotState | None:
    values = state.values
    out = []
    for i in range(3):
        vi = values[i]
        num = 0.0
        den = 0.0
        for j in range(3):
            chi = values[j] - vi
            num += chi * chi
            den += chi
        if _vanishes(state, den):
            return None
        out.append(vi + num / den)
    return PseudopivotState(tuple(out), exact=False)


def _step_exact(state: PseudopivotState) -> PseudopivotState | None:
    # One big-integer normalization per value instead of one per Fraction
    # operation; iteration doubles digit counts each step, so the gcd work
    # dominates everything else. Over a common denominator q the map is
    #   value_i -> (pj^2 + pk^2 - pi*(pj + pk)) / (q * (pj + pk - 2*pi))
    # which Fraction() reduces canonically, so the results are identical to
    # the displacement-form arithmetic.
    q = math.lcm(*(v.denominator for v in state.values))
    p = [v.numerator * (q // v.denominator) for v in state.values]
    out = []
    for i in range(3):
        pi, pj, pk = p[i], p[(i + 1) % 3], p[(i + 2) % 3]
        lin = pj + pk - 2 * pi
        if lin == 0:
            return None
        out.append(Fraction(pj * pj + pk * pk - pi * (pj + pk), q * lin))
    return PseudopivotState((out[0], out[1], out[2]), exact=True)


@dataclass(frozen=True)
class IterationTrace:
    """States visited by repeated stepping, plus why iteration stopped."""

    states: tuple[PseudopivotState, ...]
    reason: str  # COMPLETED | DIVERGED | DIGITS_EXCEEDED

    @property
    def steps(self) -> int:
        return len(self.states) - 1

    def ranges(self) -> tuple[Scalar, ...]:
        return tuple(st.range for st in self.states)

    def permutations(self) -> tuple[str, ...]:
        return tuple(st.order_permutation() for st in self.states)


def iterate(state: PseudopivotState, n: int, max_bits: int = MAX_BITS) -> IterationTrace:
    """Apply the map up to n times, stopping early on divergence or digit blowup.

    The digit guard applies to exact mode only: a successor whose numerator or
    denominator exceeds max_bits bits is discarded and iteration stops.
    """
    if n < 0:
        raise ValueError("iteration count must be >= 0")
    states = [state]
    reason = COMPLETED
    for _ in range(n):
        nxt = pseudopivot_step(states[-1])
        if nxt is None:
            reason = DIVERGED
            break
        if nxt.exact and nxt.max_bits() > max_bits:
            reason = DIGITS_EXCEEDED
            break
        states.append(nxt)
    return IterationTrace(tuple(states), reason)


class BifurcationClass(Enum):
    NEXT_MIN = "next-min"
    NEXT_MAX = "next-max"
    AT_THRESHOLD = "at-threshold"


def classify_bifurcation(state: PseudopivotState) -> BifurcationClass:
    """Predict where the inner value's image lands relative to the new triple.

    Inner above the average of the outer two: its image is the next minimum.
    Inner below: the next maximum. Inner at the average: the map diverges.
    """
    a, b, c = state.values
    if len({a, b, c}) < 3:
        raise DegenerateStateError(f"values must be distinct, got {state.values}")
    inner = sorted(state.values)[1]
    outer_avg = (min(state.values) + max(state.values)) / 2
    diff = inner - outer_avg
    if state.exact:
        if diff == 0:
            return BifurcationClass.AT_THRESHOLD
    elif abs(diff) <= FLOAT_REL_TOL * float(state.range):
        return BifurcationClass.AT_THRESHOLD
    return BifurcationClass.NEXT_MIN if diff > 0 else BifurcationClass.NEXT_MAX


def permutation_sequence(trace: IterationTrace) -> tuple[str, ...]:
    """Ascending-value label orders along a trace of at least two states."""
    if len(trace.states) < 2:
        raise ShapeError("trace must contain at least 2 states")
    return trace.permutations()


@dataclass(frozen=True)
class RangeGrowthReport:
    """Outcome of checking that the range grows strictly at every step."""

    holds_up_to: int
    first_violation: int | None
    reason: str
    ranges: tuple[Scalar, ...]

    @property
    def violated(self) -> bool:
        return self.first_violation is not None


def conjecture_range_check(
    state: PseudopivotState, n: int, max_bits: int = MAX_BITS
) -> RangeGrowthReport:
    """Empirically probe strict range growth over up to n iterations.

    holds_up_to counts the verified growth steps; a step whose range fails to
    exceed its predecessor's is recorded as first_violation (1-based step
    index). Divergence or the digit guard simply truncates the probe.
    """
    if n < 1:
        raise ValueError("need at least one iteration to check growth")
    trace = iterate(state, n, max_bits=max_bits)
    ranges = trace.ranges()
    holds = 0
    first_violation = None
    for step in range(1, len(ranges)):
        if ranges[step] > ranges[step - 1]:
            holds = step
        else:
            first_violation = step
            break
    return RangeGrowthReport(holds, first_violation, trace.reason, ranges)

from fractions import Fraction as F

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from pivotlab import (
    BifurcationClass,
    DegenerateStateError,
    PointSet,
    PseudopivotState,
    ShapeError,
    classify_bifurcation,
    conjecture_range_check,
    iterate,
    permutation_sequence,
    pivot_point,
    pseudopivot_step,
)
from pivotlab.dynamics import COMPLETED, DIGITS_EXCEEDED, DIVERGED

FIG_SET = PseudopivotState.exact_rational(-1, "0.01", 1)

rational = st.fractions(
    min_value=-20, max_value=20, max_denominator=10
)


def distinct_triples():
    return st.tuples(rational, rational, rational).filter(lambda t: len(set(t)) == 3)


class TestStep:
    def test_reference_triple_float(self):
        out = pseudopivot_step(PseudopivotState.floating(-1, 0.01, 1))
        assert out.values[0] == pytest.approx(2.0101 / 3.01, rel=1e-12)
        assert out.values[1] == pytest.approx(-100.0, rel=1e-12)
        assert out.values[2] == pytest.approx(-1.9901 / 2.99, rel=1e-12)

    def test_reference_triple_exact(self):
        out = pseudopivot_step(FIG_SET)
        assert out.values == (F(20101, 30100), F(-100), F(-19901, 29900))

    def test_inner_at_average_diverges(self):
        assert pseudopivot_step(PseudopivotState.floating(0, 1, 2)) is None
        assert pseudopivot_step(PseudopivotState.exact_rational(0, 1, 2)) is None

    def test_below_average_inner_becomes_max(self):
        out = pseudopivot_step(PseudopivotState.exact_rational(0, 1, 3))
        assert out.values == (F(5, 2), F(6), F(2, 5))
        out_f = pseudopivot_step(PseudopivotState.floating(0, 1, 3))
        assert out_f.values == pytest.approx((2.5, 6.0, 0.4), rel=1e-15)

    @given(distinct_triples())
    @settings(max_examples=100, deadline=None)
    def test_float_tracks_exact_for_five_steps(self, triple):
        exact = PseudopivotState.exact_rational(*triple)
        approx = PseudopivotState.floating(*(float(v) for v in triple))
        for _ in range(5):
            exact_next = pseudopivot_step(exact)
            approx_next = pseudopivot_step(approx)
            if exact_next is None or approx_next is None:
                break
            span = float(exact_next.range)
            for e, a in zip(exact_next.values, approx_next.values):
                assert abs(float(e) - a) <= 1e-9 * max(span, abs(float(e)))
            exact, approx = exact_next, approx_next

    @given(distinct_triples(), rational)
    @settings(max_examples=100, deadline=None)
    def test_translation_equivariance_exact(self, triple, shift):
        base = pseudopivot_step(PseudopivotState.exact_rational(*triple))
        moved = pseudopivot_step(
            PseudopivotState.exact_rational(*(v + shift for v in triple))
        )
        if base is None:
            assert moved is None
        else:
            assert moved.values == tuple(v + shift for v in base.values)

    @given(distinct_triples(), rational.filter(lambda v: v != 0))
    @settings(max_examples=100, deadline=None)
    def test_scale_equivariance_exact(self, triple, lam):
        base = pseudopivot_step(PseudopivotState.exact_rational(*triple))
        scaled = pseudopivot_step(
            PseudopivotState.exact_rational(*(v * lam for v in triple))
        )
        if base is None:
            assert scaled is None
        else:
            assert scaled.values == tuple(v * lam for v in base.values)

    @given(distinct_triples())
    @settings(max_examples=100, deadline=None)
    def test_matches_planar_pivot_bit_for_bit(self, triple):
        vals = tuple(float(v) for v in triple)
        assume(len(set(vals)) == 3)
        state = PseudopivotState.floating(*vals)
        stepped = pseudopivot_step(state)
        flat = PointSet([(v, 0.0) for v in vals])
        for j, label in enumerate((1, 2, 3)):
            pr = pivot_point(flat, label)
            if stepped is None:
                continue
            assert pr.is_finite
            assert pr.point.x == stepped.values[j]
            assert pr.point.y == 0.0


class TestIterate:
    def test_zero_steps_is_identity(self):
        trace = iterate(FIG_SET, 0)
        assert trace.states == (FIG_SET,)
        assert trace.reason == COMPLETED

    def test_six_steps_ranges_increase(self):
        trace = iterate(FIG_SET, 6)
        assert len(trace.states) == 7
        ranges = trace.ranges()
        assert all(b > a for a, b in zip(ranges, ranges[1:]))

    def test_original_max_returns_at_step_eight(self):
        trace = iterate(FIG_SET, 8)
        # label c holds the starting maximum; it is displaced for seven
        # steps and only reclaims the maximum at step eight
        perms = trace.permutations()
        assert all(p[-1] != "c" for p in perms[1:8])
        assert perms[8][-1] == "c"

    def test_divergence_recorded(self):
        trace = iterate(PseudopivotState.floating(0, 1.5, 3), 5)
        assert trace.reason == DIVERGED
        assert len(trace.states) == 1

    def test_exact_trace_satisfies_recurrences(self):
        trace = iterate(PseudopivotState.exact_rational(0, 1, 3), 6)
        for prev, nxt in zip(trace.states, trace.states[1:]):
            a, b, c = prev.values
            assert nxt.values == (
                (b * b + c * c - a * (b + c)) / (b + c - 2 * a),
                (a * a + c * c - b * (a + c)) / (a + c - 2 * b),
                (a * a + b * b - c * (a + b)) / (a + b - 2 * c),
            )

    def test_digit_guard(self):
        trace = iterate(FIG_SET, 50, max_bits=1000)
        assert trace.reason == DIGITS_EXCEEDED
        assert trace.states[-1].max_bits() <= 1000

    def test_negative_count_rejected(self):
        with pytest.raises(ValueError):
            iterate(FIG_SET, -1)


class TestBifurcation:
    def test_above_average_inner_is_next_min(self):
        state = PseudopivotState.exact_rational(0, 2, 3)
        assert classify_bifurcation(state) is BifurcationClass.NEXT_MIN
        out = pseudopivot_step(state)
        assert out.values == (F(13, 5), F(-3), F(1, 2))
        assert min(out.values) == out.values[1]

    def test_below_average_inner_is_next_max(self):
        state = PseudopivotState.exact_rational(0, 1, 3)
        assert classify_bifurcation(state) is BifurcationClass.NEXT_MAX
        out = pseudopivot_step(state)
        assert max(out.values) == out.values[1]

    def test_at_threshold(self):
        assert (
            classify_bifurcation(PseudopivotState.floating(0, 1.5, 3))
            is BifurcationClass.AT_THRESHOLD
        )

    def test_repeated_values_rejected(self):
        with pytest.raises(DegenerateStateError):
            classify_bifurcation(PseudopivotState.floating(1, 1, 2))

    @given(distinct_triples())
    @settings(max_examples=120, deadline=None)
    def test_prediction_matches_realized_position(self, triple):
        state = PseudopivotState.exact_rational(*triple)
        prediction = classify_bifurcation(state)
        stepped = pseudopivot_step(state)
        if prediction is BifurcationClass.AT_THRESHOLD:
            assert stepped is None
            return
        assume(stepped is not None)
        inner_idx = sorted(range(3), key=lambda j: state.values[j])[1]
        if prediction is BifurcationClass.NEXT_MIN:
            assert stepped.values[inner_idx] == min(stepped.values)
        else:
            assert stepped.values[inner_idx] == max(stepped.values)


class TestPermutations:
    def test_single_step_orders(self):
        trace = iterate(PseudopivotState.exact_rational(0, 1, 3), 1)
        assert permutation_sequence(trace) == ("abc", "cab")
        trace = iterate(PseudopivotState.exact_rational(0, 2, 3), 1)
        assert permutation_sequence(trace) == ("abc", "bca")

    def test_short_trace_rejected(self):
        with pytest.raises(ShapeError):
            permutation_sequence(iterate(FIG_SET, 0))

    @given(distinct_triples())
    @settings(max_examples=30, deadline=None)
    def test_no_immediate_pattern_repeat(self, triple):
        # digit guard keeps the exact iteration desk-sized; most triples
        # still yield a dozen-plus comparable steps
        trace = iterate(PseudopivotState.exact_rational(*triple), 20, max_bits=5_000)
        perms = trace.permutations()
        for a, b in zip(perms, perms[1:]):
            assert a != b


class TestRangeGrowth:
    def test_reference_set_six_steps(self):
        report = conjecture_range_check(FIG_SET, 6)
        assert report.holds_up_to == 6
        assert report.first_violation is None

    def test_threshold_start_is_vacuous(self):
        report = conjecture_range_check(PseudopivotState.exact_rational(0, "1.5", 3), 4)
        assert report.holds_up_to == 0
        assert report.first_violation is None
        assert report.reason == DIVERGED

    def test_modes_agree_on_small_case(self):
        exact = conjecture_range_check(PseudopivotState.exact_rational(0, 1, 3), 10)
        floating = conjecture_range_check(PseudopivotState.floating(0, 1, 3), 10)
        assert exact.first_violation is None
        assert floating.holds_up_to == exact.holds_up_to

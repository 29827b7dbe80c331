import math

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from pivotlab import (
    DegenerateIntervalError,
    DegenerateXError,
    LabelError,
    Multiplicities,
    Point,
    PointSet,
    ShapeError,
    centric_transform,
    coordinate_scale,
    fit_weighted_line,
    pivot_point,
    pivot_point_weighted,
    transform_T,
)

# Dyadic coordinates in [-10, 10]: exactly representable and spaced >= 1/8,
# so float properties are not drowned by conditioning artifacts.
coord = st.integers(-80, 80).map(lambda v: v / 8.0)
pair = st.tuples(coord, coord)


def point_sets(min_size=2, max_size=8):
    return st.lists(pair, min_size=min_size, max_size=max_size).filter(
        lambda ps: len({x for x, _ in ps}) >= 2
    )


class TestPointSet:
    def test_labels_and_lookup(self):
        s = PointSet([(0, 0), (1, 1), (2, 0)])
        assert list(s.labels) == [1, 2, 3]
        assert s.point(2) == Point(1, 1)
        assert len(s) == 3

    def test_rejects_single_point(self):
        with pytest.raises(ShapeError):
            PointSet([(0, 0)])

    def test_rejects_all_equal_x(self):
        with pytest.raises(DegenerateXError):
            PointSet([(1, 0), (1, 5), (1, -2)])

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            PointSet([(0, 0), (float("nan"), 1)])
        with pytest.raises(ValueError):
            PointSet([(0, 0), (float("inf"), 1)])

    def test_unknown_label(self):
        s = PointSet([(0, 0), (1, 1)])
        with pytest.raises(LabelError):
            s.point(3)
        with pytest.raises(LabelError):
            s.point(0)

    def test_coincident_points_keep_labels_and_share_pivots(self):
        s = PointSet([(0, 0), (1, 1), (1, 1)])
        assert s.point(2) == s.point(3)
        assert pivot_point(s, 2) == pivot_point(s, 3)


class TestMultiplicities:
    def test_validation(self):
        assert Multiplicities([1, 2, 3]).delta == (1, 2, 3)
        with pytest.raises(ValueError):
            Multiplicities([0, 1])
        with pytest.raises(ValueError):
            Multiplicities([1.5, 1])

    def test_repetition_round_trip(self):
        d = Multiplicities.from_repetitions([0, 3, 1])
        assert d.delta == (1, 4, 2)
        assert d.repetitions() == (0, 3, 1)

    def test_ones(self):
        assert Multiplicities.ones(4).delta == (1, 1, 1, 1)


class TestCentricTransform:
    def test_anchor_at_origin(self):
        s = PointSet([(0, 0), (1, 1)])
        out = centric_transform(s, 1)
        assert [(c.chi, c.gamma) for c in out] == [(0, 0), (1, 1)]

    def test_componentwise_subtraction(self):
        s = PointSet([(1, 2), (3, 5)])
        out = centric_transform(s, 2)
        assert [(c.chi, c.gamma) for c in out] == [(-2, -3), (0, 0)]

    def test_unknown_label(self):
        with pytest.raises(LabelError):
            centric_transform(PointSet([(0, 0), (1, 1)]), 5)

    @given(point_sets(), st.data())
    @settings(max_examples=60, deadline=None)
    def test_inverse_translation_recovers_set(self, pairs, data):
        s = PointSet(pairs)
        i = data.draw(st.integers(1, len(s)))
        anchor = s.point(i)
        out = centric_transform(s, i)
        recovered = [(c.chi + anchor.x, c.gamma + anchor.y) for c in out]
        assert recovered == [(p.x, p.y) for p in s.points]
        assert (out[i - 1].chi, out[i - 1].gamma) == (0.0, 0.0)


class TestFitWeightedLine:
    def test_two_point_exact(self):
        line = fit_weighted_line(PointSet([(0, 0), (1, 1)]))
        assert (line.m, line.b, line.sse) == (1.0, 0.0, 0.0)

    def test_three_point_unweighted(self):
        line = fit_weighted_line(PointSet([(0, 0), (1, 1), (2, 0)]))
        assert line.m == pytest.approx(0.0, abs=1e-15)
        assert line.b == pytest.approx(1 / 3)

    def test_first_point_doubled(self):
        line = fit_weighted_line(
            PointSet([(0, 0), (1, 1), (2, 0)]), Multiplicities([2, 1, 1])
        )
        assert line.m == pytest.approx(1 / 11, rel=1e-14)
        assert line.b == pytest.approx(2 / 11, rel=1e-14)

    def test_near_equal_x_degenerate(self):
        s = PointSet([(1.0, 0.0), (1.0 + 5e-13, 1.0)])
        with pytest.raises(DegenerateXError):
            fit_weighted_line(s)

    def test_length_mismatch(self):
        with pytest.raises(ShapeError):
            fit_weighted_line(PointSet([(0, 0), (1, 1)]), Multiplicities([1, 1, 1]))

    @given(point_sets(), st.data())
    @settings(max_examples=60, deadline=None)
    def test_sse_matches_definition(self, pairs, data):
        s = PointSet(pairs)
        delta = Multiplicities(data.draw(st.lists(
            st.integers(1, 5), min_size=len(s), max_size=len(s))))
        try:
            line = fit_weighted_line(s, delta)
        except DegenerateXError:
            assume(False)
        direct = sum(
            d * (line.m * p.x + line.b - p.y) ** 2
            for d, p in zip(delta.delta, s.points)
        )
        assert line.sse == pytest.approx(direct, rel=1e-9, abs=1e-12)


class TestPivotPoint:
    def test_demo_pivot(self):
        pr = pivot_point(PointSet([(0, 0), (1, 1), (2, 0)]), 1)
        assert pr.is_finite
        assert pr.point.x == pytest.approx(5 / 3, rel=1e-15)
        assert pr.point.y == pytest.approx(1 / 3, rel=1e-15)

    def test_two_point_pivot_is_other_point(self):
        pr = pivot_point(PointSet([(0, 0), (2, 0)]), 1)
        assert pr.point == Point(2.0, 0.0)

    def test_symmetric_cancellation_is_at_infinity(self):
        pr = pivot_point(PointSet([(0, 0), (1, 3), (-1, 5)]), 1)
        assert not pr.is_finite
        assert pr.point is None

    def test_weighted_reduction_is_bit_identical(self):
        s = PointSet([(0.1, -3.7), (1.25, 1.5), (2.375, 0.875), (-4, 2)])
        for label in s.labels:
            a = pivot_point(s, label)
            b = pivot_point_weighted(s, label, Multiplicities.ones(4))
            assert a == b

    def test_weighted_demo(self):
        pr = pivot_point_weighted(
            PointSet([(0, 0), (1, 1), (2, 0)]), 1, Multiplicities([1, 2, 1])
        )
        assert (pr.point.x, pr.point.y) == (1.5, 0.5)

    def test_heavy_repetition_approaches_repeated_point(self):
        pr = pivot_point_weighted(
            PointSet([(0, 0), (1, 1), (2, 0)]), 1, Multiplicities([1, 10**6, 1])
        )
        assert pr.point.distance_to(Point(1, 1)) < 1e-5

    def test_length_mismatch(self):
        with pytest.raises(ShapeError):
            pivot_point_weighted(PointSet([(0, 0), (1, 1)]), 1, Multiplicities([1]))


class TestPivotOnLine:
    """The fitted line passes through the pivot no matter how often its point repeats."""

    @given(point_sets(), st.data())
    @settings(max_examples=80, deadline=None)
    def test_pivot_stays_on_weighted_fits(self, pairs, data):
        s = PointSet(pairs)
        i = data.draw(st.integers(1, len(s)))
        pr = pivot_point(s, i)
        assume(pr.is_finite)
        scale = coordinate_scale(s)
        for k in (0, 1, 7, 50):
            delta = [1] * len(s)
            delta[i - 1] = k + 1
            try:
                line = fit_weighted_line(s, Multiplicities(delta))
            except DegenerateXError:
                assume(False)
            assert line.distance_to(pr.point) <= 1e-9 * scale

    @given(point_sets(max_size=6), st.data())
    @settings(max_examples=60, deadline=None)
    def test_translation_equivariance(self, pairs, data):
        s = PointSet(pairs)
        i = data.draw(st.integers(1, len(s)))
        dx = data.draw(coord)
        dy = data.draw(coord)
        pr = pivot_point(s, i)
        pr_t = pivot_point(s.translated(dx, dy), i)
        assert pr.is_finite == pr_t.is_finite
        if pr.is_finite:
            scale = coordinate_scale(s) + abs(dx) + abs(dy)
            assert pr_t.point.x == pytest.approx(pr.point.x + dx, abs=1e-9 * scale)
            assert pr_t.point.y == pytest.approx(pr.point.y + dy, abs=1e-9 * scale)

    @given(point_sets(max_size=6), st.sampled_from([-4.0, -0.5, 0.25, 2.0, 8.0]), st.data())
    @settings(max_examples=60, deadline=None)
    def test_scale_equivariance(self, pairs, lam, data):
        s = PointSet(pairs)
        i = data.draw(st.integers(1, len(s)))
        scaled = PointSet([(lam * p.x, lam * p.y) for p in s.points])
        pr = pivot_point(s, i)
        pr_s = pivot_point(scaled, i)
        assert pr.is_finite == pr_s.is_finite
        if pr.is_finite:
            tol = 1e-9 * abs(lam) * coordinate_scale(s)
            assert pr_s.point.x == pytest.approx(lam * pr.point.x, abs=tol)
            assert pr_s.point.y == pytest.approx(lam * pr.point.y, abs=tol)

    def test_at_infinity_status_survives_scaling(self):
        s = PointSet([(0, 0), (1, 3), (-1, 5)])
        scaled = PointSet([(2 * p.x, 2 * p.y) for p in s.points])
        assert not pivot_point(s, 1).is_finite
        assert not pivot_point(scaled, 1).is_finite


class TestTransformT:
    def test_origin(self):
        assert transform_T(0, 1, 3) == -2.0

    def test_pivot_abscissa(self):
        assert transform_T(2.5, 1, 3) == 0.5

    def test_endpoints(self):
        assert transform_T(1, 1, 3) == -1.0
        assert transform_T(3, 1, 3) == 1.0

    def test_degenerate_interval(self):
        with pytest.raises(DegenerateIntervalError):
            transform_T(0, 2, 2)

    @given(point_sets(min_size=3, max_size=3))
    @settings(max_examples=120, deadline=None)
    def test_negative_inversion_identity(self, pairs):
        s = PointSet(pairs)
        chi = [p.x - s.point(1).x for p in s.points]
        assume(chi[1] != chi[2])
        pr = pivot_point(s, 1)
        assume(pr.is_finite)
        chi_pivot = pr.point.x - s.point(1).x
        product = transform_T(chi_pivot, chi[1], chi[2]) * transform_T(
            chi[0], chi[1], chi[2]
        )
        assert product == pytest.approx(-1.0, rel=1e-9)

"""Tests for pair counting, the grid index, sweeps and the fine-part partition."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cantor_besicovitch.counting import (
    GridIndex,
    count_level,
    count_pairs_bruteforce,
    count_pairs_fast,
    count_sweep,
    intersecting_pairs,
    level_families,
    m_theta,
    mtheta_partition,
    multiscale_counts,
    omegas_at,
    pairwise_area_sum,
    per_rect_counts,
    split_level,
    sweep_cells,
    thetas_at,
)
from cantor_besicovitch.errors import PairBudgetError, UnrealizableSplitError
from cantor_besicovitch.geometry import oriented_box
from cantor_besicovitch.models import DigitSystem, OmegaPolicy


class TestStaircaseLevelOne:
    def test_count_at_zero(self, staircase):
        record = count_level(staircase, 1, 0.0)
        assert record.L == 4
        assert record.per_i == {1: 2, 2: 2}
        assert record.max_per_i == 2
        assert record.delta == pytest.approx(1 / 3)

    def test_pair_records_match_corners(self, staircase):
        record = count_level(staircase, 1, 0.0)
        assert len(record.pairs) == record.L
        assert {(p.i, p.j) for p in record.pairs} == {(1, 1), (1, 2), (2, 1), (2, 2)}
        first = next(p for p in record.pairs if p.i == 2)
        assert first.x == pytest.approx((1 / 3, 0.0))

    def test_pairwise_area_sum(self, staircase):
        R, R_theta = level_families(staircase, 1, 0.0)
        assert pairwise_area_sum(R, R_theta) == pytest.approx(3 + 2 / 3)

    def test_per_rect_counts(self, staircase):
        R, R_theta = level_families(staircase, 1, 0.0)
        assert per_rect_counts(R, R_theta) == {1: 2, 2: 2}


class TestCounters:
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_zero_angle_counts_every_rect(self, staircase, n):
        assert count_level(staircase, n, 0.0).L >= 2**n

    @pytest.mark.parametrize("theta", [0.0, 0.05, 0.3, 1.0, 2.0, math.pi])
    @pytest.mark.parametrize("n", [2, 4])
    def test_fast_matches_bruteforce(self, staircase, n, theta):
        R, R_theta = level_families(staircase, n, theta)
        fast = count_pairs_fast(R, R_theta, keep_pairs=False)
        brute = count_pairs_bruteforce(R, R_theta, keep_pairs=False)
        assert fast.L == brute.L
        assert fast.per_i == brute.per_i

    @given(
        seed=st.integers(min_value=0, max_value=50),
        theta=st.floats(min_value=0.0, max_value=math.pi),
        wx=st.floats(min_value=-0.5, max_value=0.5),
        wy=st.floats(min_value=-0.5, max_value=0.5),
    )
    @settings(max_examples=40, deadline=None)
    def test_fast_matches_bruteforce_random(self, seed, theta, wx, wy):
        system = DigitSystem.seeded(5, 2, seed=seed)
        R, R_theta = level_families(system, 3, theta, (wx, wy))
        assert count_pairs_fast(R, R_theta).L == count_pairs_bruteforce(R, R_theta).L

    def test_pairs_in_index_order(self, staircase):
        R, R_theta = level_families(staircase, 3, 0.2)
        keys = [(a.index, b.index) for a, b, _ in intersecting_pairs(R, R_theta)]
        assert keys == sorted(keys)

    def test_pair_budget(self, staircase):
        with pytest.raises(PairBudgetError):
            count_level(staircase, 3, 0.3, pair_cap=1)
        with pytest.raises(PairBudgetError):
            count_level(staircase, 3, 0.3, method="brute", pair_cap=10)

    def test_unknown_method(self, staircase):
        R, R_theta = level_families(staircase, 1, 0.0)
        with pytest.raises(ValueError, match="method"):
            list(intersecting_pairs(R, R_theta, method="quadtree"))

    def test_truncated_pair_list(self, staircase):
        from cantor_besicovitch.config import get_settings

        get_settings().numerics.pair_list_cap = 3
        record = count_level(staircase, 2, 0.0)
        assert record.pairs_truncated
        assert len(record.pairs) == 3
        assert record.L > 3


class TestGridIndex:
    def test_query_is_sorted(self):
        boxes = [oriented_box(x, 0, x + 1, 1) for x in (3.0, 0.0, 1.5)]
        index = GridIndex(1.0, boxes)
        assert index.query((0.5, 0.2, 2.0, 0.8)) == [1, 2]
        assert len(index) == 3

    def test_invalid_cell(self):
        with pytest.raises(ValueError):
            GridIndex(0.0)


class TestSweep:
    def test_cell_order(self, staircase):
        cells = sweep_cells(staircase, [1, 2], [0.0, 0.5], [(0.0, 0.0), (0.1, 0.0)])
        assert [(c.n, c.theta, c.omega) for c in cells[:3]] == [
            (1, 0.0, (0.0, 0.0)),
            (1, 0.0, (0.1, 0.0)),
            (1, 0.5, (0.0, 0.0)),
        ]
        assert len(cells) == 8

    def test_per_level_rule(self):
        assert thetas_at(lambda n: [n / 10], 3) == [0.3]
        assert thetas_at([0.1, 0.2], 7) == [0.1, 0.2]

    def test_omegas(self):
        assert omegas_at([], 0.2) == [(0.0, 0.0)]
        policy = OmegaPolicy.parse("mixed:0.5:2", seed=3)
        omegas = omegas_at(policy, 0.2)
        assert omegas[0] == (0.0, 0.0) and len(omegas) == 3
        assert all(math.hypot(*w) <= 0.5 for w in omegas)
        assert omegas == omegas_at(OmegaPolicy.parse("mixed:0.5:2", seed=3), 0.2)

    def test_table_omegas(self, staircase):
        policy = OmegaPolicy.from_table([[0.2, 0.1, 0.0], [0.2, 0.0, 0.1]])
        assert omegas_at(policy, 0.2) == [(0.0, 0.1), (0.1, 0.0)]
        assert omegas_at(policy, 0.5) == [(0.0, 0.0)]
        records = count_sweep(staircase, [2], [0.2], policy)
        assert [r.L for r in records] == [
            count_level(staircase, 2, 0.2, w, keep_pairs=False).L for w in [(0.0, 0.1), (0.1, 0.0)]
        ]

    @pytest.mark.parametrize("rows", [[], [[0.2, 0.1]]])
    def test_bad_table(self, rows):
        with pytest.raises(ValueError, match="omega table"):
            OmegaPolicy.parse("table", table=rows)

    def test_sweep_matches_single_counts(self, staircase):
        records = count_sweep(staircase, [1, 2], [0.0, 0.4], OmegaPolicy())
        assert [r.L for r in records] == [
            count_level(staircase, n, t, keep_pairs=False).L for n in (1, 2) for t in (0.0, 0.4)
        ]

    @pytest.mark.slow
    def test_sweep_with_workers(self, staircase):
        serial = count_sweep(staircase, [2, 3], [0.1, 0.7, 2.5], OmegaPolicy())
        parallel = count_sweep(staircase, [2, 3], [0.1, 0.7, 2.5], OmegaPolicy(), jobs=2)
        assert [r.L for r in serial] == [r.L for r in parallel]


class TestPartition:
    def test_split_level(self):
        assert split_level(3, 0.2) == 1
        assert split_level(3, 1 / 27) == 3

    def test_partition_sums_to_count(self, staircase):
        n, theta = 4, 0.05
        counts = mtheta_partition(staircase, n, theta)
        assert sum(counts.values()) == count_level(staircase, n, theta).L

    def test_m_theta_lookup(self, staircase):
        counts = mtheta_partition(staircase, 4, 0.05)
        xi, value = next(iter(counts.items()))
        assert m_theta(staircase, 4, 0.05, (0.0, 0.0), xi) == value

    def test_unrealizable_fine_part(self, staircase):
        with pytest.raises(UnrealizableSplitError):
            m_theta(staircase, 4, 0.05, (0.0, 0.0), (10**6, 0))

    def test_split_beyond_level(self, staircase):
        with pytest.raises(UnrealizableSplitError):
            mtheta_partition(staircase, 2, 0.001)

    def test_multiscale(self, staircase):
        counts = multiscale_counts(staircase, 3, 0.4, (0.0, 0.0), [1, 3])
        assert set(counts) == {1, 3}
        with pytest.raises(ValueError):
            multiscale_counts(staircase, 3, 0.4, (0.0, 0.0), [4])

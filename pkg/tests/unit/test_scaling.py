"""Tests for the cross-level overlap-sum and chain checks."""

import math

import pytest

from cantor_besicovitch.config import get_settings
from cantor_besicovitch.models import AreaBracket, ChainReport, DoubleSumReport
from cantor_besicovitch.verification import bracket_spread, verify_area_sums, verify_chain


def bracket(center: float, spread: float = 0.0) -> AreaBracket:
    half = center * spread / 2
    return AreaBracket(inner=center - half, center=center, outer=center + half, cell=0.01, cells=100)


def double_sum(n: int, ratio: float, spread: float = 0.02, comparison: float = 0.1) -> DoubleSumReport:
    fixed = ratio * comparison
    return DoubleSumReport(
        n=n,
        delta=2.0**-n,
        angles=16,
        diagonal=fixed,
        total=bracket(fixed * 10, spread),
        pairwise_upper=fixed * 20,
        fixed_sum=bracket(fixed, spread),
        fixed_comparison=comparison,
        double_comparison=comparison * 10,
        branch="1-s^2",
    )


def chain(n: int, lhs: float, mid: float = 1.0, rhs: float = 9.0) -> ChainReport:
    right = math.sqrt(mid) * math.sqrt(rhs)
    return ChainReport(
        n=n,
        delta=2.0**-n,
        angles=16,
        lhs=AreaBracket.exact(lhs),
        mid=AreaBracket.exact(mid),
        rhs=AreaBracket.exact(rhs),
        holds=lhs <= right,
        implied_lower=lhs * lhs / rhs,
        dimension=1.5,
        dimension_log=1.5,
        dimension_measured=None,
        gamma_contained=True,
    )


def by_name(reports):
    return {r.lemma: r for r in reports}


class TestBracketSpread:
    def test_relative_width(self):
        assert bracket_spread(bracket(2.0, 0.1)) == pytest.approx(0.1)

    def test_empty_center(self):
        assert bracket_spread(AreaBracket.exact(0.0)) == 0.0
        assert bracket_spread(AreaBracket(0.0, 0.0, 0.5, 0.1, 4)) == math.inf


class TestAreaSums:
    def test_stable_ratios_pass(self):
        reports = by_name(verify_area_sums([double_sum(n, 1.0 + 0.5 * n) for n in range(3, 8)]))
        scaling = reports["area_sum"]
        assert scaling.passed is True
        assert scaling.instances == 5
        assert scaling.stability == pytest.approx(4.5 / 2.5)
        assert "normalized by the 1-s^2 branch" in scaling.notes
        assert reports["area_bracket"].passed is True

    def test_drifting_ratio_fails(self):
        scaling = by_name(verify_area_sums([double_sum(3, 1.0), double_sum(7, 6.0)]))["area_sum"]
        assert scaling.passed is False
        assert scaling.stability == pytest.approx(6.0)

    def test_stability_factor_is_configurable(self):
        get_settings().verify.stability_factor = 10.0
        scaling = by_name(verify_area_sums([double_sum(3, 1.0), double_sum(7, 6.0)]))["area_sum"]
        assert scaling.passed is True

    def test_wide_bracket_fails(self):
        width = by_name(verify_area_sums([double_sum(3, 1.0), double_sum(4, 1.0, spread=0.4)]))[
            "area_bracket"
        ]
        assert width.passed is False
        assert width.measured_max == pytest.approx(0.4)
        assert any(note.startswith("n=4: fixed sum bracket") for note in width.notes)
        assert not any(note.startswith("n=3") for note in width.notes)

    def test_coarse_levels_are_skipped(self):
        reports = by_name(verify_area_sums([double_sum(1, 100.0, spread=1.0), double_sum(3, 1.0)]))
        assert reports["area_sum"].skipped == 1
        assert reports["area_sum"].passed is True
        assert reports["area_bracket"].skipped == 1
        assert reports["area_bracket"].passed is True

    def test_min_level_override(self):
        reports = by_name(verify_area_sums([double_sum(1, 1.0, spread=1.0)], min_level=1))
        assert reports["area_bracket"].passed is False

    def test_nothing_checked(self):
        scaling = by_name(verify_area_sums([]))["area_sum"]
        assert scaling.instances == 0
        assert scaling.passed is None


class TestChain:
    def test_holding_chain(self):
        reports = by_name(verify_chain([chain(n, lhs=2.0) for n in (1, 2, 3, 4)]))
        assert reports["chain"].passed is True
        assert reports["chain"].instances == 4
        assert reports["chain"].constant == pytest.approx(2.0 / 3.0)
        floor = reports["chain_floor"]
        assert floor.passed is True
        assert floor.skipped == 2
        assert floor.constant == pytest.approx(0.25)

    def test_violated_chain(self):
        holds = by_name(verify_chain([chain(3, lhs=4.0)]))["chain"]
        assert holds.passed is False
        assert any(note.startswith("n=3: LHS") for note in holds.notes)

    def test_slack_absorbs_rounding(self):
        right = 3.0
        holds = by_name(verify_chain([chain(3, lhs=right * (1 + 1e-15))]))["chain"]
        assert holds.passed is True

    def test_low_lhs_fails_the_floor(self):
        floor = by_name(verify_chain([chain(2, lhs=0.1), chain(3, lhs=0.4)]))["chain_floor"]
        assert floor.passed is False
        assert floor.skipped == 1
        assert floor.notes == ["n=3: LHS 0.4 below 0.5"]

    def test_empty_lhs(self):
        floor = by_name(verify_chain([chain(3, lhs=0.0)]))["chain_floor"]
        assert floor.passed is False
        assert floor.constant == math.inf

    def test_configured_floor(self):
        get_settings().verify.chain_floor = 0.3
        floor = by_name(verify_chain([chain(3, lhs=0.4)]))["chain_floor"]
        assert floor.passed is True

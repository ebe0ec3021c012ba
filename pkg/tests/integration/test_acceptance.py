"""Full acceptance sweeps over small systems (slow; run with ``-m slow``)."""

import math

import pytest

from cantor_besicovitch.config import parse_theta_grid
from cantor_besicovitch.counting import count_level, count_sweep
from cantor_besicovitch.ensemble import double_sum, minkowski_chain
from cantor_besicovitch.models import DigitSystem, EnsembleConfig, OmegaPolicy
from cantor_besicovitch.verification import (
    fit_exponent,
    log_inverse,
    oracle_check,
    predicted_count_exponent,
    verify_area_sums,
    verify_chain,
    verify_lemma_simple1,
)

SEEDS = (1, 2, 3)
OMEGAS = OmegaPolicy.parse("mixed:0.5:5", seed=7)


def systems() -> list[DigitSystem]:
    out = []
    for a in (3, 4, 5):
        for b in range(2, a):
            out.append(DigitSystem.staircase(a, b))
            out += [DigitSystem.seeded(a, b, seed) for seed in SEEDS]
    return out


def levels_up_to(sys: DigitSystem, n_max: int, max_words: int = 1024) -> list[int]:
    return [n for n in range(1, n_max + 1) if sys.b**n <= max_words]


@pytest.mark.slow
class TestCountAcceptance:
    @pytest.mark.parametrize("sys", systems(), ids=lambda sys: sys.label)
    def test_simple1_over_the_full_grid(self, sys):
        records = count_sweep(sys, levels_up_to(sys, 6), parse_theta_grid("grid:256", sys.a), OMEGAS)
        report = verify_lemma_simple1(records)
        assert report.passed is True, report.notes
        assert report.measured_max <= 10

    @pytest.mark.parametrize("sys", systems(), ids=lambda sys: sys.label)
    def test_oracle_agrees_on_small_words(self, sys):
        records = count_sweep(sys, levels_up_to(sys, 6), parse_theta_grid("grid:16", sys.a), OMEGAS)
        report = oracle_check(sys, records, max_words=1024)
        assert report.passed is True, report.notes
        assert report.skipped == 0
        assert report.measured_max == 0

    @pytest.mark.parametrize("theta", [0.2, 0.5, 0.8])
    def test_fixed_angle_growth(self, staircase, theta):
        points = []
        for n in range(3, 9):
            record = count_level(staircase, n, theta, keep_pairs=False)
            points.append((log_inverse(record.delta), math.log(max(record.L, 1))))
        fit = fit_exponent(points)
        assert fit.slope <= predicted_count_exponent(staircase.s) + 0.2


@pytest.mark.slow
class TestEnsembleAcceptance:
    @pytest.mark.parametrize(
        "a,levels",
        [(3, (3, 4, 5)), (4, (3, 4))],
    )
    def test_fixed_sum_scaling(self, a, levels):
        sys = DigitSystem.staircase(a, 2)
        reports = [double_sum(EnsembleConfig(sys, n)) for n in levels]
        for check in verify_area_sums(reports):
            assert check.passed is True, (check.lemma, check.notes)
            assert check.instances > 0

    def test_chain_and_floor(self, staircase):
        chains = [minkowski_chain(EnsembleConfig(staircase, n)) for n in (2, 3)]
        holds, floor = verify_chain(chains)
        assert holds.passed is True, holds.notes
        assert floor.passed is True, floor.notes
        assert floor.skipped == 1
        assert chains[-1].lhs.inner >= 0.5

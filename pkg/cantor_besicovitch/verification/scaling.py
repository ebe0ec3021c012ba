"""Cross-level checks on the overlap sums and the measure chain."""

import math
from typing import Optional, Sequence

from ..config import get_settings
from ..models import AreaBracket, BoundReport, ChainReport, DoubleSumReport


def bracket_spread(bracket: AreaBracket) -> float:
    """(outer - inner) / center; inf for an empty center."""
    if bracket.center > 0:
        return bracket.width / bracket.center
    return 0.0 if bracket.width == 0 else math.inf


def verify_area_sums(
    reports: Sequence[DoubleSumReport],
    min_level: Optional[int] = None,
) -> list[BoundReport]:
    """
    Scaling of the fixed-angle overlap sum and the quality of its raster brackets.

    ``area_sum`` is fitted: the sum over theta of leb(R_theta ∩ R), divided by
    its predicted size delta^e log(1/delta), must vary by less than the
    stability factor across levels. ``area_bracket`` is exact: the bracket of
    both the fixed sum and the double sum stays narrower than
    ``bracket_width`` times its center.

    Levels below ``min_level`` are counted as skipped.
    """
    verify = get_settings().verify
    min_level = verify.scaling_min_level if min_level is None else min_level

    scaling = BoundReport(lemma="area_sum", exact_constant=False)
    width = BoundReport(lemma="area_bracket", exact_constant=True, bound=verify.bracket_width)
    for report in reports:
        if report.n < min_level:
            scaling.skipped += 1
            width.skipped += 1
            continue
        scaling.observe(report.fixed_sum.center, report.fixed_comparison, report.n)
        scaling.note(f"normalized by the {report.branch} branch")
        for name, bracket in (("fixed", report.fixed_sum), ("double", report.total)):
            spread = bracket_spread(bracket)
            width.observe(spread, verify.bracket_width, report.n)
            if spread > verify.bracket_width:
                width.note(f"n={report.n}: {name} sum bracket spans {spread:.3g} of its center")

    scaling.settle_fitted(verify.stability_factor)
    return [scaling, width]


def verify_chain(
    chains: Sequence[ChainReport],
    min_level: Optional[int] = None,
) -> list[BoundReport]:
    """
    ``chain``: LHS <= sqrt(MID) sqrt(RHS) on every level (inner LHS, outer right side).
    ``chain_floor``: the certified LHS stays above ``chain_floor`` from ``min_level`` on;
    the measured value is chain_floor / LHS, so it passes at or below 1.
    """
    settings = get_settings()
    verify, slack = settings.verify, settings.numerics.lemma_slack
    min_level = verify.scaling_min_level if min_level is None else min_level

    holds = BoundReport(lemma="chain", exact_constant=True, bound=1.0)
    floor = BoundReport(lemma="chain_floor", exact_constant=True, bound=1.0)
    for chain in chains:
        right = math.sqrt(chain.mid.outer) * math.sqrt(chain.rhs.outer)
        ratio = chain.lhs.inner / right if right > 0 else (math.inf if chain.lhs.inner > 0 else 0.0)
        holds.observe(ratio, 1 + slack, chain.n)
        if not chain.holds:
            holds.note(f"n={chain.n}: LHS {chain.lhs.inner!r} above sqrt(MID) sqrt(RHS) {right!r}")

        if chain.n < min_level:
            floor.skipped += 1
            continue
        lhs = chain.lhs.inner
        floor.observe(verify.chain_floor / lhs if lhs > 0 else math.inf, 1.0, chain.n)
        if lhs < verify.chain_floor:
            floor.note(f"n={chain.n}: LHS {lhs!r} below {verify.chain_floor!r}")
    return [holds, floor]

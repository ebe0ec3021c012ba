"""Pairwise overlap areas of rotated families and the sums built from them."""

import math
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from ..cantor import lattice_union_area, rect_approx
from ..config import get_settings
from ..counting import CountCell, count_cell, intersecting_pairs
from ..geometry import (
    effective_angle,
    intersection_polygon,
    polygon_area,
    polygons_raster,
    rotate_family,
)
from ..models import (
    AngleSet,
    AreaBracket,
    BoundReport,
    DoubleSumReport,
    EnsembleConfig,
    OrientedRect,
    OverlapEntry,
)
from ..parallel import run_cells
from ..utils.logging import cell_logger, get_logger
from ..verification import area_bound, at_least, log_inverse, predicted_fixed_exponent
from .angles import angle_set

logger = get_logger(__name__)

EMPTY = AreaBracket.exact(0.0)


@dataclass(frozen=True)
class OverlapCell:
    """One profile entry; carries the raster knobs for worker processes."""

    cfg: EnsembleConfig
    k: int
    theta: float
    theta_prime: float
    cell: float
    cap: int


def overlap_bracket(
    first: Sequence[OrientedRect],
    second: Sequence[OrientedRect],
    cell: float,
    cap: Optional[int] = None,
) -> tuple[AreaBracket, float]:
    """(raster bracket of the union of pairwise intersections, sum of their areas)."""
    polygons = []
    pairwise = 0.0
    for a, b, result in intersecting_pairs(first, second):
        polygon = intersection_polygon(a, b, result)
        if polygon:
            polygons.append(polygon)
            pairwise += min(polygon_area(polygon), a.area, b.area)
    if not polygons:
        return AreaBracket(inner=0.0, center=0.0, outer=0.0, cell=cell, cells=0), 0.0
    return polygons_raster(polygons, cell, cap).bracket(), pairwise


def direct_overlap(
    cfg: EnsembleConfig,
    theta: float,
    theta_prime: float,
    cap: Optional[int] = None,
) -> tuple[AreaBracket, float]:
    """leb(R_theta ∩ R_theta') with each family under its own translation."""
    cell = cfg.delta / get_settings().numerics.pair_cell_divisor
    rects = rect_approx(cfg.system, cfg.n)
    first = rotate_family(rects, theta, cfg.omega.omega_for(theta))
    second = rotate_family(rects, theta_prime, cfg.omega.omega_for(theta_prime))
    return overlap_bracket(first, second, cell, cap)


def overlap_entry(cell: OverlapCell) -> OverlapEntry:
    cfg = cell.cfg
    phi = cell.theta - cell.theta_prime
    bound = area_bound(cfg.delta, cfg.system.s, phi) if cell.k > 0 else math.nan
    rects = rect_approx(cfg.system, cfg.n)
    if cell.k == 0 and cfg.omega.is_zero:
        exact = float(lattice_union_area(rects))
        family = rotate_family(rects, 0.0)
        _, pairwise = overlap_bracket(family, family, cell.cell, cell.cap)
        return OverlapEntry(cell.k, phi, AreaBracket.exact(exact), pairwise, bound)

    first = rotate_family(rects, cell.theta, cfg.omega.omega_for(cell.theta))
    second = rotate_family(rects, cell.theta_prime, cfg.omega.omega_for(cell.theta_prime))
    bracket, pairwise = overlap_bracket(first, second, cell.cell, cell.cap)
    return OverlapEntry(cell.k, phi, bracket, pairwise, bound)


def pair_overlap_profile(
    cfg: EnsembleConfig,
    angles: Optional[AngleSet] = None,
    cap: Optional[int] = None,
    jobs: int = 1,
) -> list[OverlapEntry]:
    """
    leb(R_phi ∩ R) for every phi = k delta in the angle set.

    With zero translations this is the whole double-sum profile, since
    leb(R_theta ∩ R_theta') = leb(R_(theta - theta') ∩ R). Otherwise entry k
    is the direct overlap of the translated families at angles k delta and 0.
    """
    numerics = get_settings().numerics
    angles = angles or angle_set(cfg.delta)
    cell = cfg.delta / numerics.pair_cell_divisor
    cap = numerics.raster_cap if cap is None else cap
    cells = [
        OverlapCell(cfg, k, phi, angles.angles[0], cell, cap) for k, phi in enumerate(angles)
    ]
    cell_logger(logger, n=cfg.n).debug(f"Overlap profile: {len(cells)} angles, cell {cell!r}")
    return run_cells(overlap_entry, cells, jobs)


def _fixed_comparison(delta: float, s: float) -> tuple[float, str]:
    """max(delta^(1-s^2), delta^(1/s-1)) log(1/delta) and the dominant branch."""
    branch = "1-s^2" if 1 - s * s <= 1 / s - 1 else "1/s-1"
    return delta ** predicted_fixed_exponent(s) * log_inverse(delta), branch


def double_sum(
    cfg: EnsembleConfig,
    angles: Optional[AngleSet] = None,
    cap: Optional[int] = None,
    jobs: int = 1,
    profile: Optional[Sequence[OverlapEntry]] = None,
) -> DoubleSumReport:
    """
    sum over theta, theta' in A of leb(R_theta ∩ R_theta').

    The diagonal |A| leb(R) is exact. With zero translations the off-diagonal
    terms come from the profile with multiplicity 2(|A| - k); otherwise every
    unordered pair is evaluated directly.
    """
    angles = angles or angle_set(cfg.delta)
    size = len(angles)
    leb_r = float(lattice_union_area(rect_approx(cfg.system, cfg.n)))
    diagonal = size * leb_r
    numerics = get_settings().numerics
    cell = cfg.delta / numerics.pair_cell_divisor
    cap = numerics.raster_cap if cap is None else cap

    if cfg.omega.is_zero:
        profile = list(profile) if profile is not None else pair_overlap_profile(cfg, angles, cap, jobs)
        off = EMPTY
        pairwise = size * profile[0].pairwise_sum
        fixed = EMPTY
        for entry in profile:
            fixed = fixed + entry.bracket
            if entry.k == 0:
                continue
            weight = 2 * (size - entry.k)
            off = off + entry.bracket.scaled(weight)
            pairwise += weight * entry.pairwise_sum
    else:
        cells = [
            OverlapCell(cfg, j - i, angles.angles[j], angles.angles[i], cell, cap)
            for i in range(size)
            for j in range(i + 1, size)
        ]
        entries = run_cells(overlap_entry, cells, jobs)
        off = EMPTY
        pairwise = math.nan
        fixed = AreaBracket.exact(leb_r)
        for c, entry in zip(cells, entries):
            off = off + entry.bracket.scaled(2)
            if c.theta_prime == angles.angles[0]:
                fixed = fixed + entry.bracket

    comparison, branch = _fixed_comparison(cfg.delta, cfg.system.s)
    report = DoubleSumReport(
        n=cfg.n,
        delta=cfg.delta,
        angles=size,
        diagonal=diagonal,
        total=AreaBracket.exact(diagonal) + off,
        pairwise_upper=pairwise,
        fixed_sum=fixed,
        fixed_comparison=comparison,
        double_comparison=comparison / cfg.delta,
        branch=branch,
    )
    cell_logger(logger, n=cfg.n).info(
        f"Double sum: [{report.total.inner!r}, {report.total.outer!r}] "
        f"over {size} angles, ratio {report.double_ratio:.4g}"
    )
    return report


def easy_bound_check(
    cfg: EnsembleConfig,
    angles: Optional[AngleSet] = None,
    counts: Optional[Mapping[float, int]] = None,
    pair_cap: Optional[int] = None,
    jobs: int = 1,
) -> list[BoundReport]:
    """
    sum over theta >= delta in A of L(delta, theta) times a per-pair area cap,
    against delta^(1-s) log(1/delta).

    ``easy`` uses min(delta^(1+s), delta^2/theta_eff); ``easy_literal`` uses
    delta^2/theta. Both are fitted-constant reports at this level.
    """
    delta, s = cfg.delta, cfg.system.s
    angles = angles or angle_set(delta)
    thetas = [theta for theta in angles if at_least(theta, delta)]
    if counts is None:
        cells = [
            CountCell(cfg.system, cfg.n, theta, cfg.omega.omega_for(theta), pair_cap=pair_cap)
            for theta in thetas
        ]
        counts = {c.theta: r.L for c, r in zip(cells, run_cells(count_cell, cells, jobs))}

    eff_sum = 0.0
    literal_sum = 0.0
    clamped = 0
    for theta in thetas:
        L = counts[theta]
        eff = effective_angle(theta)
        cap = delta ** (1 + s) if eff <= 0 else min(delta ** (1 + s), delta * delta / eff)
        if eff <= 0 or delta * delta / eff > cap:
            clamped += 1
        eff_sum += L * cap
        literal_sum += L * delta * delta / theta

    comparison = delta ** (1 - s) * log_inverse(delta)
    easy = BoundReport(lemma="easy", exact_constant=False, bound=comparison)
    easy.observe(eff_sum, comparison, cfg.n)
    easy.note(
        "per-pair cap is min(delta^(1+s), delta^2/theta_eff); the rectangle area delta^(1+s) "
        f"applied at {clamped} of {len(thetas)} angles (easy_literal keeps delta^2/theta)"
    )
    literal = BoundReport(lemma="easy_literal", exact_constant=False, bound=comparison)
    literal.observe(literal_sum, comparison, cfg.n)
    return [easy, literal]

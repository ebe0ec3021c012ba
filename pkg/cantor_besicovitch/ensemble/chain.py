"""Neighbourhoods of the rotated graph and the Cauchy-Schwarz measure chain."""

import math
from dataclasses import dataclass
from typing import Optional

from ..cantor import graph_anchors, rect_approx
from ..config import get_settings
from ..geometry import TiledRaster, rotate_family, rotate_point
from ..models import (
    AngleSet,
    ChainReport,
    DigitSystem,
    DoubleSumReport,
    EnsembleConfig,
    GammaMeasure,
)
from ..parallel import run_cells
from ..utils.logging import cell_logger, get_logger
from ..verification import log_inverse
from .angles import angle_set
from .areas import double_sum

logger = get_logger(__name__)


def anchor_depth(sys: DigitSystem, n: int) -> int:
    """max(n + 3, least N with b^-N <= delta/2)."""
    target = 2 * sys.a**n
    depth = max(0, math.ceil(math.log(target) / math.log(sys.b)))
    while sys.b**depth < target:
        depth += 1
    while depth > 0 and sys.b ** (depth - 1) >= target:
        depth -= 1
    return max(n + 3, depth)


def _gamma_cell(cfg: EnsembleConfig) -> float:
    return cfg.delta / get_settings().numerics.gamma_cell_divisor


def gamma_neighborhood_measure(
    cfg: EnsembleConfig,
    theta: float = 0.0,
    depth: Optional[int] = None,
    cap: Optional[int] = None,
) -> GammaMeasure:
    """
    Bracket leb of the delta-neighbourhood of the rotated level-N anchor cloud,
    and check cell by cell that it lies inside R_theta.
    """
    depth = anchor_depth(cfg.system, cfg.n) if depth is None else depth
    if depth < cfg.n:
        raise ValueError(f"Anchor depth {depth} must be >= n={cfg.n}")
    cell = _gamma_cell(cfg)
    omega = cfg.omega.omega_for(theta)

    cloud = TiledRaster(cell, cap=cap)
    for anchor in graph_anchors(cfg.system, depth):
        cloud.add_disc(rotate_point((float(anchor.x), float(anchor.y)), theta, omega), cfg.delta)
    family = TiledRaster(cell, cap=cap)
    for rect in rotate_family(rect_approx(cfg.system, cfg.n), theta, omega):
        family.add_rect(rect)

    contained = cloud.covered_by(family)
    if not contained:
        cell_logger(logger, n=cfg.n, theta=theta).warning("Gamma neighbourhood escapes R_theta")
    return GammaMeasure(theta=theta, depth=depth, bracket=cloud.bracket(), contained=contained)


@dataclass(frozen=True)
class UnionChunk:
    """Angles painted by one worker into a shared-lattice raster."""

    cfg: EnsembleConfig
    thetas: tuple[float, ...]
    cell: float
    cap: int


def union_chunk(chunk: UnionChunk) -> TiledRaster:
    raster = TiledRaster(chunk.cell, cap=chunk.cap)
    rects = rect_approx(chunk.cfg.system, chunk.cfg.n)
    for theta in chunk.thetas:
        for rect in rotate_family(rects, theta, chunk.cfg.omega.omega_for(theta)):
            raster.add_rect(rect)
    return raster


def family_union_raster(
    cfg: EnsembleConfig,
    angles: AngleSet,
    cap: Optional[int] = None,
    jobs: int = 1,
) -> TiledRaster:
    """Union of R_theta over the angle set; worker rasters are OR-merged in order."""
    cap = get_settings().numerics.raster_cap if cap is None else cap
    cell = _gamma_cell(cfg)
    chunks = max(1, min(jobs, len(angles)))
    thetas = angles.angles
    work = [UnionChunk(cfg, thetas[c::chunks], cell, cap) for c in range(chunks)]
    rasters = run_cells(union_chunk, work, jobs)
    union = rasters[0]
    for raster in rasters[1:]:
        union.merge(raster)
    return union


def dimension_statistic(measure: float, delta: float, log_corrected: bool = False) -> float:
    """2 + log(measure) / log(1/delta), optionally with measure * log(1/delta)."""
    scale = log_inverse(delta)
    if measure <= 0:
        return math.nan
    value = measure * scale if log_corrected else measure
    return 2 + math.log(value) / scale


def minkowski_chain(
    cfg: EnsembleConfig,
    angles: Optional[AngleSet] = None,
    cap: Optional[int] = None,
    jobs: int = 1,
    double: Optional[DoubleSumReport] = None,
) -> ChainReport:
    """
    LHS = sum over theta of leb(Gamma_theta(delta)), MID = leb(E(delta)) and
    RHS = the double sum, with LHS <= sqrt(MID) sqrt(RHS) checked on brackets.

    Rigid motions preserve measure, so LHS is |A| times the theta = 0 bracket.
    """
    angles = angles or angle_set(cfg.delta)
    slack = get_settings().numerics.lemma_slack

    gamma = gamma_neighborhood_measure(cfg, 0.0, cap=cap)
    contained = gamma.contained
    if len(angles) > 1:
        middle = angles.angles[len(angles) // 2]
        contained = contained and gamma_neighborhood_measure(cfg, middle, cap=cap).contained
    lhs = gamma.bracket.scaled(len(angles))

    mid = family_union_raster(cfg, angles, cap, jobs).bracket()
    rhs = (double or double_sum(cfg, angles, cap, jobs)).total

    holds = lhs.inner <= math.sqrt(mid.outer) * math.sqrt(rhs.outer) * (1 + slack)
    implied = lhs.inner**2 / rhs.outer if rhs.outer > 0 else math.nan
    report = ChainReport(
        n=cfg.n,
        delta=cfg.delta,
        angles=len(angles),
        lhs=lhs,
        mid=mid,
        rhs=rhs,
        holds=holds,
        implied_lower=implied,
        dimension=dimension_statistic(implied, cfg.delta),
        dimension_log=dimension_statistic(implied, cfg.delta, log_corrected=True),
        dimension_measured=dimension_statistic(mid.center, cfg.delta) if mid.center > 0 else None,
        gamma_contained=contained,
    )
    log = cell_logger(logger, n=cfg.n)
    if not holds:
        log.warning(f"Measure chain violated: LHS {lhs.inner!r}")
    log.info(
        f"Chain: LHS {lhs.inner!r} <= sqrt({mid.outer!r}) sqrt({rhs.outer!r}); "
        f"dimension {report.dimension:.4f}"
    )
    return report

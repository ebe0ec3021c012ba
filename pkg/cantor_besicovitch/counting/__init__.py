"""Counting intersecting rectangle pairs L(delta, theta)."""

from .grid_index import GridIndex
from .pairs import (
    count_level,
    count_pairs_bruteforce,
    count_pairs_fast,
    intersecting_pairs,
    level_families,
    pairwise_area_sum,
    per_rect_counts,
)
from .partition import (
    decompositions,
    m_theta,
    mtheta_partition,
    multiscale_counts,
    split_level,
)
from .sweep import (
    CountCell,
    count_cell,
    count_sweep,
    omegas_at,
    sweep_cells,
    thetas_at,
)

__all__ = [
    "GridIndex",
    # Pair counting
    "count_level",
    "count_pairs_bruteforce",
    "count_pairs_fast",
    "intersecting_pairs",
    "level_families",
    "pairwise_area_sum",
    "per_rect_counts",
    # Fine-part partition
    "decompositions",
    "m_theta",
    "mtheta_partition",
    "multiscale_counts",
    "split_level",
    # Sweeps
    "CountCell",
    "count_cell",
    "count_sweep",
    "omegas_at",
    "sweep_cells",
    "thetas_at",
]

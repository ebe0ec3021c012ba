"""Angle families, overlap sums and the measure chain."""

from ..verification.bounds import S0, easy_floor, theorem_floor
from .angles import angle_set
from .areas import (
    direct_overlap,
    double_sum,
    easy_bound_check,
    overlap_bracket,
    pair_overlap_profile,
)
from .chain import (
    anchor_depth,
    dimension_statistic,
    family_union_raster,
    gamma_neighborhood_measure,
    minkowski_chain,
)

__all__ = [
    "angle_set",
    # Overlap sums
    "direct_overlap",
    "double_sum",
    "easy_bound_check",
    "overlap_bracket",
    "pair_overlap_profile",
    # Measure chain
    "anchor_depth",
    "dimension_statistic",
    "family_union_raster",
    "gamma_neighborhood_measure",
    "minkowski_chain",
    # Floors
    "S0",
    "easy_floor",
    "theorem_floor",
]

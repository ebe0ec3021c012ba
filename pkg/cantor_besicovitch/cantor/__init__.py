"""Generalized Cantor sets, Cantor-graph anchors and rectangle approximations."""

from .construction import (
    cantor_intervals,
    check_enumeration,
    children,
    core_cells,
    decompose,
    graph_anchors,
    level_cells,
    parent_index,
    rect_approx,
    vertical_index,
    word_for_index,
)
from .scales import a_adic_level
from .measure import (
    gamma_in_rects,
    int_bound_crossover,
    lattice_union_area,
)

__all__ = [
    # Construction
    "cantor_intervals",
    "check_enumeration",
    "children",
    "core_cells",
    "decompose",
    "graph_anchors",
    "level_cells",
    "parent_index",
    "rect_approx",
    "vertical_index",
    "word_for_index",
    # Scales
    "a_adic_level",
    # Exact measures
    "gamma_in_rects",
    "int_bound_crossover",
    "lattice_union_area",
]

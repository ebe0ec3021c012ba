"""Exact measures on the (1/a^n, 1/b^n) lattice."""

from collections import defaultdict
from fractions import Fraction
from typing import Iterable, Optional

from ..models import DigitSystem, GridRect
from ..utils.logging import get_logger
from .construction import level_cells, parent_index, rect_approx

logger = get_logger(__name__)


def lattice_union_area(rects: Iterable[GridRect]) -> Fraction:
    """
    Exact Lebesgue measure of a union of same-level lattice rectangles.

    Sweeps unit columns of width 1/a^n and merges the y-intervals in each.
    """
    columns: dict[int, list[tuple[int, int]]] = defaultdict(list)
    level: Optional[tuple[int, int, int]] = None
    for rect in rects:
        key = (rect.n, rect.a, rect.b)
        if level is None:
            level = key
        elif key != level:
            raise ValueError(f"Mixed lattices in union: {level} and {key}")
        for col in range(rect.px, rect.px + rect.width_units):
            columns[col].append((rect.py, rect.py + rect.height_units))

    if level is None:
        return Fraction(0)

    covered = 0
    for intervals in columns.values():
        intervals.sort()
        lo, hi = intervals[0]
        for start, end in intervals[1:]:
            if start > hi:
                covered += hi - lo
                lo, hi = start, end
            else:
                hi = max(hi, end)
        covered += hi - lo

    n, a, b = level
    return Fraction(covered, a**n * b**n)


def gamma_in_rects(sys: DigitSystem, n: int, depth: int) -> bool:
    """
    Check that the sup-norm delta-box of every level-``depth`` anchor lies in R_n.

    Each anchor is tested against the rectangle of its level-n ancestor on
    exact rationals.
    """
    if depth < n:
        raise ValueError(f"Anchor depth {depth} must be >= n={n}")
    rects = rect_approx(sys, n)
    delta = Fraction(1, sys.a**n)
    for _, px, py in level_cells(sys, depth):
        ancestor = rects[parent_index(sys, py + 1, depth, n) - 1]
        x = Fraction(px, sys.a**depth)
        y = Fraction(py, sys.b**depth)
        if not (
            ancestor.contains_point(x - delta, y - delta)
            and ancestor.contains_point(x + delta, y + delta)
        ):
            logger.debug(f"Anchor ({x}, {y}) at depth {depth} escapes T_{ancestor.index}")
            return False
    return True


def int_bound_crossover(delta: float, s: float) -> float:
    """delta^(1-s): below this angle delta^2/theta exceeds delta * delta^s."""
    return delta ** (1 - s)

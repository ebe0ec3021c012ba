"""Separating-axis intersection test for closed oriented rectangles."""

import math
from typing import Optional

from ..config import get_settings
from ..errors import DegenerateRectangleError
from ..models import IntersectResult, OrientedRect, Point, Verdict


def _edge_normals(rect: OrientedRect) -> list[Point]:
    """Unit normals of two adjacent edges (the other two are parallel)."""
    normals = []
    c = rect.corners
    for k in range(2):
        ex = c[k + 1][0] - c[k][0]
        ey = c[k + 1][1] - c[k][1]
        length = math.hypot(ex, ey)
        if length == 0.0 or not math.isfinite(length):
            raise DegenerateRectangleError(f"Rectangle {rect.source} has a zero-length side")
        normals.append((ey / length, -ex / length))
    return normals


def _project(corners, axis: Point) -> tuple[float, float]:
    dots = [p[0] * axis[0] + p[1] * axis[1] for p in corners]
    return min(dots), max(dots)


def separation_gap(a: OrientedRect, b: OrientedRect) -> tuple[float, Point]:
    """
    Largest gap between the projections over the four candidate axes.

    Positive means separated; a value <= 0 means the closed rectangles meet.
    """
    best_gap = -math.inf
    best_axis: Point = (1.0, 0.0)
    for axis in _edge_normals(a) + _edge_normals(b):
        lo_a, hi_a = _project(a.corners, axis)
        lo_b, hi_b = _project(b.corners, axis)
        gap = max(lo_b - hi_a, lo_a - hi_b)
        if gap > best_gap:
            best_gap, best_axis = gap, axis
    return best_gap, best_axis


def rects_intersect(
    a: OrientedRect,
    b: OrientedRect,
    eps: Optional[float] = None,
) -> IntersectResult:
    """
    Decide whether two closed rectangles meet.

    Gaps within eps * (larger diagonal) of zero give MARGINAL, which callers
    count as intersecting.
    """
    eps = get_settings().numerics.eps_geom if eps is None else eps
    tol = eps * max(a.diagonal, b.diagonal)
    gap, axis = separation_gap(a, b)
    if gap > tol:
        verdict = Verdict.DISJOINT
    elif gap >= -tol:
        verdict = Verdict.MARGINAL
    else:
        verdict = Verdict.INTERSECTING
    return IntersectResult(verdict=verdict, margin=gap, axis=axis)


def bboxes_overlap(
    a: tuple[float, float, float, float],
    b: tuple[float, float, float, float],
    tol: float = 0.0,
) -> bool:
    """Closed axis-aligned boxes (xmin, ymin, xmax, ymax) overlap within tol."""
    return not (
        a[2] < b[0] - tol or b[2] < a[0] - tol or a[3] < b[1] - tol or b[3] < a[1] - tol
    )

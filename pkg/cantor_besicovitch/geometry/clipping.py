"""Convex polygon clipping (Sutherland-Hodgman) and polygon areas."""

from typing import Optional, Sequence

from ..models import IntersectResult, OrientedRect, Point
from .intersect import rects_intersect


def clip_convex(subject: Sequence[Point], clip: Sequence[Point]) -> list[Point]:
    """
    Clip a polygon against a convex counterclockwise polygon.

    Points on a clip edge are kept, so touching polygons yield a degenerate
    (zero-area) result rather than an empty one.
    """
    output = list(subject)
    if not output or not clip:
        return []

    cp1 = clip[-1]
    for cp2 in clip:
        if not output:
            return []
        ex, ey = cp2[0] - cp1[0], cp2[1] - cp1[1]

        def side(p: Point) -> float:
            return ex * (p[1] - cp1[1]) - ey * (p[0] - cp1[0])

        current = output
        output = []
        s = current[-1]
        s_side = side(s)
        for e in current:
            e_side = side(e)
            if e_side >= 0:
                if s_side < 0:
                    output.append(_crossing(s, e, s_side, e_side))
                output.append(e)
            elif s_side >= 0:
                output.append(_crossing(s, e, s_side, e_side))
            s, s_side = e, e_side
        cp1 = cp2
    return output


def _crossing(s: Point, e: Point, s_side: float, e_side: float) -> Point:
    t = s_side / (s_side - e_side)
    return (s[0] + t * (e[0] - s[0]), s[1] + t * (e[1] - s[1]))


def polygon_area(polygon: Sequence[Point]) -> float:
    """Shoelace area (absolute value)."""
    if len(polygon) < 3:
        return 0.0
    total = 0.0
    for (x0, y0), (x1, y1) in zip(polygon, list(polygon[1:]) + [polygon[0]]):
        total += x0 * y1 - x1 * y0
    return abs(total) / 2


def intersection_polygon(
    a: OrientedRect,
    b: OrientedRect,
    verdict: Optional[IntersectResult] = None,
) -> list[Point]:
    """Vertices of A ∩ B (empty when the rectangles are disjoint)."""
    verdict = verdict or rects_intersect(a, b)
    if not verdict.intersects:
        return []
    return clip_convex(list(a.corners), list(b.corners))


def intersection_area(
    a: OrientedRect,
    b: OrientedRect,
    verdict: Optional[IntersectResult] = None,
) -> float:
    """leb(A ∩ B), capped by the smaller rectangle area."""
    polygon = intersection_polygon(a, b, verdict)
    if not polygon:
        return 0.0
    return min(polygon_area(polygon), a.area, b.area)

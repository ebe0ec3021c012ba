"""Rotated rectangles and intersection verdicts."""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

Point = tuple[float, float]


class Verdict(str, Enum):
    """Outcome of a closed-rectangle intersection test."""

    DISJOINT = "disjoint"
    INTERSECTING = "intersecting"
    MARGINAL = "marginal"  # Within eps_geom of touching; counted as intersecting


@dataclass(frozen=True)
class OrientedRect:
    """Image of a GridRect under tau_theta(z) = e^{i theta} z + omega."""

    corners: tuple[Point, Point, Point, Point]  # Counterclockwise, first = image of bottom-left
    theta: float = 0.0
    omega: Point = (0.0, 0.0)
    source: tuple[int, int] = (0, 0)  # (level n, index i)

    @property
    def index(self) -> int:
        return self.source[1]

    @property
    def side_lengths(self) -> tuple[float, float]:
        (x0, y0), (x1, y1), (x2, y2) = self.corners[0], self.corners[1], self.corners[2]
        return math.hypot(x1 - x0, y1 - y0), math.hypot(x2 - x1, y2 - y1)

    @property
    def diagonal(self) -> float:
        (x0, y0), (x2, y2) = self.corners[0], self.corners[2]
        return math.hypot(x2 - x0, y2 - y0)

    @property
    def area(self) -> float:
        w, h = self.side_lengths
        return w * h

    @property
    def bbox(self) -> tuple[float, float, float, float]:
        """(xmin, ymin, xmax, ymax)."""
        xs = [p[0] for p in self.corners]
        ys = [p[1] for p in self.corners]
        return min(xs), min(ys), max(xs), max(ys)

    @property
    def center(self) -> Point:
        (x0, y0), (x2, y2) = self.corners[0], self.corners[2]
        return (x0 + x2) / 2, (y0 + y2) / 2

    def is_rectangle(self, eps: float = 1e-12) -> bool:
        """Opposite sides parallel and of equal length within relative eps."""
        c = self.corners
        edges = [(c[(k + 1) % 4][0] - c[k][0], c[(k + 1) % 4][1] - c[k][1]) for k in range(4)]
        scale = max(self.diagonal, 1e-300)
        for k in range(2):
            ex, ey = edges[k]
            fx, fy = edges[k + 2]
            if abs(ex + fx) > eps * scale * 8 or abs(ey + fy) > eps * scale * 8:
                return False
        dot = edges[0][0] * edges[1][0] + edges[0][1] * edges[1][1]
        return abs(dot) <= eps * scale * scale * 8


@dataclass
class IntersectResult:
    """Separating-axis verdict with witness."""

    verdict: Verdict
    margin: float  # Largest separating gap over candidate axes (positive = separated)
    axis: Optional[Point] = None  # Separating (or least overlapping) unit axis
    polygon: list[Point] = field(default_factory=list)

    @property
    def intersects(self) -> bool:
        """Marginal verdicts count as intersecting."""
        return self.verdict != Verdict.DISJOINT

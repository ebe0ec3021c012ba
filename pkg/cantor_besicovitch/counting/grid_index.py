"""Uniform-grid spatial hash over rectangle bounding boxes."""

import math
from collections import defaultdict
from typing import Sequence

from ..models import OrientedRect


class GridIndex:
    """
    Buckets from grid cells to positions of rectangles whose bbox meets them.

    Buckets list positions in insertion order, and queries return sorted
    positions, so scans are deterministic.
    """

    def __init__(self, cell_size: float, rects: Sequence[OrientedRect] = (), pad: float = 0.0):
        if not cell_size > 0:
            raise ValueError(f"Cell size must be positive, got {cell_size}")
        self.cell_size = cell_size
        self.pad = pad
        self.buckets: dict[tuple[int, int], list[int]] = defaultdict(list)
        self.rects: list[OrientedRect] = []
        for rect in rects:
            self.insert(rect)

    def _cells(self, bbox: tuple[float, float, float, float]):
        x0, y0, x1, y1 = bbox
        c = self.cell_size
        cx0, cx1 = math.floor((x0 - self.pad) / c), math.floor((x1 + self.pad) / c)
        cy0, cy1 = math.floor((y0 - self.pad) / c), math.floor((y1 + self.pad) / c)
        for cx in range(cx0, cx1 + 1):
            for cy in range(cy0, cy1 + 1):
                yield cx, cy

    def insert(self, rect: OrientedRect) -> int:
        """Add a rectangle; returns its position."""
        position = len(self.rects)
        self.rects.append(rect)
        for cell in self._cells(rect.bbox):
            self.buckets[cell].append(position)
        return position

    def query(self, bbox: tuple[float, float, float, float]) -> list[int]:
        """Sorted positions of rectangles sharing a bucket with the bbox."""
        found: set[int] = set()
        for cell in self._cells(bbox):
            bucket = self.buckets.get(cell)
            if bucket:
                found.update(bucket)
        return sorted(found)

    def __len__(self) -> int:
        return len(self.rects)

"""Sparse tiled rasters bracketing the measure of unions of convex pieces.

The lattice of cells [i c, (i+1) c] x [j c, (j+1) c] is anchored at the
origin, so rasters built with equal cell sizes can be merged by boolean OR
and compared cell by cell. Three layers are kept per tile:

* ``inner``  - cells entirely inside one piece (certified lower bound)
* ``center`` - cells whose centre is covered (point estimate)
* ``outer``  - cells touching some piece (certified upper bound)
"""

import math
from typing import Iterable, Optional, Sequence

import numpy as np

from ..config import get_settings
from ..errors import RasterCapError
from ..models import AreaBracket, OrientedRect, Point
from ..utils.logging import get_logger

logger = get_logger(__name__)

TileKey = tuple[int, int]
LAYERS = ("inner", "center", "outer")


class TiledRaster:
    """Boolean cell layers stored in square numpy tiles, created on demand."""

    def __init__(
        self,
        cell: float,
        tile: Optional[int] = None,
        cap: Optional[int] = None,
        eps: Optional[float] = None,
    ):
        if not cell > 0 or not math.isfinite(cell):
            raise ValueError(f"Raster cell must be positive and finite, got {cell}")
        numerics = get_settings().numerics
        self.cell = cell
        self.tile = tile or numerics.raster_tile
        self.cap = numerics.raster_cap if cap is None else cap
        self.eps = numerics.eps_geom if eps is None else eps
        self.tiles: dict[TileKey, dict[str, np.ndarray]] = {}

    @property
    def materialized(self) -> int:
        """Number of cells held in memory."""
        return len(self.tiles) * self.tile * self.tile

    def _cell_span(self, lo: float, hi: float) -> tuple[int, int]:
        return math.floor(lo / self.cell), math.floor(hi / self.cell)

    def _tile(self, key: TileKey) -> dict[str, np.ndarray]:
        layers = self.tiles.get(key)
        if layers is None:
            requested = self.materialized + self.tile * self.tile
            if requested > self.cap:
                raise RasterCapError(requested, self.cap)
            layers = {name: np.zeros((self.tile, self.tile), dtype=bool) for name in LAYERS}
            self.tiles[key] = layers
        return layers

    def _blocks(self, ix0: int, ix1: int, iy0: int, iy1: int):
        """Yield (tile key, global x range, global y range) pieces of a cell box."""
        t = self.tile
        for ty in range(iy0 // t, iy1 // t + 1):
            gy0, gy1 = max(iy0, ty * t), min(iy1, ty * t + t - 1)
            for tx in range(ix0 // t, ix1 // t + 1):
                gx0, gx1 = max(ix0, tx * t), min(ix1, tx * t + t - 1)
                yield (tx, ty), (gx0, gx1), (gy0, gy1)

    def _paint(self, key, gx, gy, inner, center, outer) -> None:
        t = self.tile
        layers = self._tile(key)
        sx = slice(gx[0] - key[0] * t, gx[1] - key[0] * t + 1)
        sy = slice(gy[0] - key[1] * t, gy[1] - key[1] * t + 1)
        layers["inner"][sy, sx] |= inner
        layers["center"][sy, sx] |= center
        layers["outer"][sy, sx] |= outer

    def _grids(self, gx, gy):
        c = self.cell
        ix = np.arange(gx[0], gx[1] + 1, dtype=np.float64)
        iy = np.arange(gy[0], gy[1] + 1, dtype=np.float64)[:, None]
        return ix * c, (ix + 1) * c, (ix + 0.5) * c, iy * c, (iy + 1) * c, (iy + 0.5) * c

    def add_polygon(self, corners: Sequence[Point]) -> None:
        """Paint a convex counterclockwise polygon."""
        edges = []
        for k in range(len(corners)):
            (x0, y0), (x1, y1) = corners[k], corners[(k + 1) % len(corners)]
            length = math.hypot(x1 - x0, y1 - y0)
            if length == 0.0:
                continue
            nx, ny = (y1 - y0) / length, -(x1 - x0) / length  # Outward normal
            edges.append((nx, ny, nx * x0 + ny * y0))
        if len(edges) < 3:
            return

        xs = [p[0] for p in corners]
        ys = [p[1] for p in corners]
        scale = max(max(xs) - min(xs), max(ys) - min(ys), self.cell)
        tol = self.eps * scale
        ix0, ix1 = self._cell_span(min(xs) - tol, max(xs) + tol)
        iy0, iy1 = self._cell_span(min(ys) - tol, max(ys) + tol)

        for key, gx, gy in self._blocks(ix0, ix1, iy0, iy1):
            x0, x1, xc, y0, y1, yc = self._grids(gx, gy)
            shape = (y0.shape[0], x0.shape[0])
            inner = np.ones(shape, dtype=bool)
            center = np.ones(shape, dtype=bool)
            outer = np.ones(shape, dtype=bool)
            for nx, ny, h in edges:
                hi = (nx * (x1 if nx > 0 else x0)) + (ny * (y1 if ny > 0 else y0))
                lo = (nx * (x0 if nx > 0 else x1)) + (ny * (y0 if ny > 0 else y1))
                inner &= hi <= h - tol
                outer &= lo <= h + tol
                center &= (nx * xc + ny * yc) <= h
            if outer.any():
                self._paint(key, gx, gy, inner, center & outer, outer)

    def add_rect(self, rect: OrientedRect) -> None:
        self.add_polygon(rect.corners)

    def add_disc(self, center: Point, radius: float) -> None:
        """Paint the closed Euclidean disc of the given radius."""
        cx, cy = center
        tol = self.eps * max(radius, self.cell)
        ix0, ix1 = self._cell_span(cx - radius - tol, cx + radius + tol)
        iy0, iy1 = self._cell_span(cy - radius - tol, cy + radius + tol)
        r2 = radius * radius
        for key, gx, gy in self._blocks(ix0, ix1, iy0, iy1):
            x0, x1, xc, y0, y1, yc = self._grids(gx, gy)
            near = (np.clip(cx, x0, x1) - cx) ** 2 + (np.clip(cy, y0, y1) - cy) ** 2
            far = np.maximum(np.abs(x0 - cx), np.abs(x1 - cx)) ** 2 + np.maximum(
                np.abs(y0 - cy), np.abs(y1 - cy)
            ) ** 2
            inner = far <= (radius - tol) ** 2 if radius > tol else np.zeros_like(far, dtype=bool)
            outer = near <= (radius + tol) ** 2
            centre = (xc - cx) ** 2 + (yc - cy) ** 2 <= r2
            if outer.any():
                self._paint(key, gx, gy, inner, centre, outer)

    def merge(self, other: "TiledRaster") -> "TiledRaster":
        """In-place boolean OR with a raster on the same lattice."""
        if other.cell != self.cell or other.tile != self.tile:
            raise ValueError("Cannot merge rasters on different lattices")
        for key in sorted(other.tiles):
            layers = self._tile(key)
            for name in LAYERS:
                layers[name] |= other.tiles[key][name]
        return self

    def count(self, layer: str) -> int:
        return int(sum(int(np.count_nonzero(self.tiles[key][layer])) for key in sorted(self.tiles)))

    def bracket(self) -> AreaBracket:
        """Cell counts times cell area."""
        area = self.cell * self.cell
        return AreaBracket(
            inner=self.count("inner") * area,
            center=self.count("center") * area,
            outer=self.count("outer") * area,
            cell=self.cell,
            cells=self.materialized,
        )

    def covered_by(self, other: "TiledRaster") -> bool:
        """Every inner cell of this raster is an outer cell of ``other``."""
        if other.cell != self.cell or other.tile != self.tile:
            raise ValueError("Cannot compare rasters on different lattices")
        for key, layers in self.tiles.items():
            inner = layers["inner"]
            if not inner.any():
                continue
            if key not in other.tiles:
                return False
            if np.any(inner & ~other.tiles[key]["outer"]):
                return False
        return True


def union_area_raster(
    rects: Iterable[OrientedRect],
    cell: float,
    cap: Optional[int] = None,
) -> AreaBracket:
    """Bracket leb(union of rects) on a raster of the given cell size."""
    raster = TiledRaster(cell, cap=cap)
    for rect in rects:
        raster.add_rect(rect)
    bracket = raster.bracket()
    logger.debug(
        f"Raster union: cell={cell!r} tiles={len(raster.tiles)} "
        f"bracket=[{bracket.inner!r}, {bracket.outer!r}]"
    )
    return bracket


def polygons_raster(
    polygons: Iterable[Sequence[Point]],
    cell: float,
    cap: Optional[int] = None,
) -> TiledRaster:
    """Raster of a union of convex polygons."""
    raster = TiledRaster(cell, cap=cap)
    for polygon in polygons:
        raster.add_polygon(polygon)
    return raster

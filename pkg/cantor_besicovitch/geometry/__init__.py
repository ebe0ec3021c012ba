"""Rotated-rectangle geometry: motions, intersection, clipping, rasters."""

from .clipping import (
    clip_convex,
    intersection_area,
    intersection_polygon,
    polygon_area,
)
from .estimates import (
    effective_angle,
    literal_int_cap,
    projection_inequalities,
    strip_area_cap,
)
from .intersect import (
    bboxes_overlap,
    rects_intersect,
    separation_gap,
)
from .raster import (
    TiledRaster,
    polygons_raster,
    union_area_raster,
)
from .rotation import (
    oriented_box,
    rigid_motion,
    rotate_family,
    rotate_point,
    rotate_rect,
)

__all__ = [
    # Motions
    "rotate_point",
    "rotate_rect",
    "rotate_family",
    "rigid_motion",
    "oriented_box",
    # Intersection
    "rects_intersect",
    "separation_gap",
    "bboxes_overlap",
    # Clipping
    "clip_convex",
    "intersection_area",
    "intersection_polygon",
    "polygon_area",
    # Estimates
    "effective_angle",
    "literal_int_cap",
    "projection_inequalities",
    "strip_area_cap",
    # Rasters
    "TiledRaster",
    "polygons_raster",
    "union_area_raster",
]

"""Tests for tiled rasters."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cantor_besicovitch.errors import RasterCapError
from cantor_besicovitch.geometry import (
    TiledRaster,
    oriented_box,
    polygons_raster,
    rigid_motion,
    union_area_raster,
)


class TestTiledRaster:
    def test_aligned_square_center_is_exact(self):
        raster = TiledRaster(0.25, tile=8)
        raster.add_rect(oriented_box(0, 0, 1, 1))
        bracket = raster.bracket()
        assert bracket.center == pytest.approx(1.0)
        assert bracket.inner <= 1.0 <= bracket.outer

    def test_centres_on_the_boundary_are_covered(self):
        disc = TiledRaster(1.0, tile=4)
        disc.add_disc((0.5, 0.5), 1.0)
        assert disc.count("center") == 5
        square = TiledRaster(1.0, tile=4)
        square.add_rect(oriented_box(-0.5, -0.5, 1.5, 1.5))
        assert square.count("center") == 9

    def test_negative_coordinates(self):
        raster = TiledRaster(0.1, tile=4)
        raster.add_rect(oriented_box(-1.0, -0.5, -0.2, 0.3))
        bracket = raster.bracket()
        assert bracket.inner <= 0.64 <= bracket.outer
        assert bracket.center == pytest.approx(0.64, abs=0.05)

    @given(
        theta=st.floats(min_value=0.0, max_value=math.pi),
        width=st.floats(min_value=0.2, max_value=1.5),
        height=st.floats(min_value=0.2, max_value=1.5),
    )
    @settings(max_examples=50, deadline=None)
    def test_bracket_contains_area(self, theta, width, height):
        rect = rigid_motion(oriented_box(0, 0, width, height), theta, (0.3, -0.2))
        bracket = union_area_raster([rect], 0.05)
        assert bracket.inner <= width * height + 1e-9
        assert width * height <= bracket.outer + 1e-9

    def test_finer_cells_narrow_bracket(self):
        rect = rigid_motion(oriented_box(0, 0, 1, 0.5), 0.4)
        coarse = union_area_raster([rect], 0.1)
        fine = union_area_raster([rect], 0.025)
        assert fine.width < coarse.width

    def test_disc(self):
        raster = TiledRaster(0.02)
        raster.add_disc((0.1, -0.3), 0.5)
        bracket = raster.bracket()
        assert bracket.inner <= math.pi * 0.25 <= bracket.outer
        assert bracket.center == pytest.approx(math.pi * 0.25, rel=0.02)

    def test_merge_is_union(self):
        left = polygons_raster([oriented_box(0, 0, 1, 1).corners], 0.25)
        right = polygons_raster([oriented_box(2, 0, 3, 1).corners], 0.25)
        both = left.count("center") + right.count("center")
        assert left.merge(right).count("center") == both

    def test_merge_needs_same_lattice(self):
        with pytest.raises(ValueError):
            TiledRaster(0.1).merge(TiledRaster(0.2))

    def test_covered_by(self):
        small = polygons_raster([oriented_box(0.2, 0.2, 0.6, 0.6).corners], 0.1)
        large = polygons_raster([oriented_box(0, 0, 1, 1).corners], 0.1)
        assert small.covered_by(large)
        assert not large.covered_by(small)

    def test_cap(self):
        raster = TiledRaster(0.01, tile=16, cap=256)
        with pytest.raises(RasterCapError):
            raster.add_rect(oriented_box(0, 0, 1, 1))

    def test_invalid_cell(self):
        with pytest.raises(ValueError):
            TiledRaster(0.0)

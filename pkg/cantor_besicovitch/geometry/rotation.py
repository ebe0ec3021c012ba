"""The rigid motions tau_theta(z) = e^{i theta} z + omega."""

import math
from typing import Iterable

from ..models import GridRect, OrientedRect, Point

_ANGLE_SLACK = 1e-12


def rotate_point(p: Point, theta: float, omega: Point = (0.0, 0.0)) -> Point:
    """e^{i theta} p + omega."""
    c, s = math.cos(theta), math.sin(theta)
    x, y = p
    return (c * x - s * y + omega[0], s * x + c * y + omega[1])


def rotate_rect(r: GridRect, theta: float, omega: Point = (0.0, 0.0)) -> OrientedRect:
    """
    Image of a lattice rectangle under tau_theta, rotating about the origin.

    The exact corners are converted to floats only here.
    """
    if not -_ANGLE_SLACK <= theta <= math.pi + _ANGLE_SLACK:
        raise ValueError(f"theta must lie in [0, pi], got {theta}")
    c, s = math.cos(theta), math.sin(theta)
    wx, wy = float(omega[0]), float(omega[1])
    corners = []
    for fx, fy in r.corners:
        x, y = float(fx), float(fy)
        corners.append((c * x - s * y + wx, s * x + c * y + wy))
    return OrientedRect(
        corners=(corners[0], corners[1], corners[2], corners[3]),
        theta=theta,
        omega=(wx, wy),
        source=(r.n, r.index),
    )


def rotate_family(
    rects: Iterable[GridRect], theta: float, omega: Point = (0.0, 0.0)
) -> list[OrientedRect]:
    """R_theta: every rectangle of a family under the same tau_theta."""
    return [rotate_rect(r, theta, omega) for r in rects]


def rigid_motion(rect: OrientedRect, theta: float, omega: Point = (0.0, 0.0)) -> OrientedRect:
    """Apply a further rotation about the origin and a translation to an oriented rectangle."""
    moved = tuple(rotate_point(p, theta, omega) for p in rect.corners)
    return OrientedRect(
        corners=(moved[0], moved[1], moved[2], moved[3]),
        theta=rect.theta + theta,
        omega=rotate_point(rect.omega, theta, omega),
        source=rect.source,
    )


def oriented_box(x0: float, y0: float, x1: float, y1: float) -> OrientedRect:
    """Axis-aligned float box as an OrientedRect (counterclockwise)."""
    return OrientedRect(corners=((x0, y0), (x1, y0), (x1, y1), (x0, y1)))

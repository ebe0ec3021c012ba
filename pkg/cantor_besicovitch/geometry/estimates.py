"""Closed-form geometric estimates: strip intersections and rotation projections."""

import math
from typing import Optional

from ..config import get_settings
from ..models import Point
from .rotation import rotate_point


def effective_angle(theta: float) -> float:
    """theta_eff = min(theta, pi - theta)."""
    return min(theta, math.pi - theta)


def strip_area_cap(delta: float, theta: float) -> float:
    """
    delta^2 / sin(theta_eff): area of two crossing strips of width delta.

    Returns +inf when theta_eff vanishes.
    """
    if not 0.0 <= theta <= math.pi:
        raise ValueError(f"theta must lie in [0, pi], got {theta}")
    sin_eff = math.sin(effective_angle(theta))
    if sin_eff <= 0.0:
        return math.inf
    return delta * delta / sin_eff


def literal_int_cap(delta: float, theta: float) -> float:
    """delta^2 / |theta|, the unadjusted form."""
    return math.inf if theta == 0 else delta * delta / abs(theta)


def projection_inequalities(
    z: Point,
    theta: float,
    eps: Optional[float] = None,
) -> tuple[bool, bool, bool]:
    """
    The three rotation-projection inequalities for z and e^{i theta} z.

    (1) |x(e^{i t} z) - x(z)| <= |t z|
    (2) |y(e^{i t} z) - y(z)| <= |t z|
    (3) ||x(e^{i t} z) - x(z)| - |t y(z)|| <= 2 t^2 |z|
    each with slack eps * |z|.
    """
    eps = get_settings().numerics.eps_geom if eps is None else eps
    norm = math.hypot(z[0], z[1])
    slack = eps * norm
    rx, ry = rotate_point(z, theta)
    dx = abs(rx - z[0])
    dy = abs(ry - z[1])
    first = dx <= abs(theta) * norm + slack
    second = dy <= abs(theta) * norm + slack
    third = abs(dx - abs(theta * z[1])) <= 2 * theta * theta * norm + slack
    return first, second, third

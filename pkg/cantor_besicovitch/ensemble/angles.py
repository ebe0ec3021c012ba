"""Maximal delta-separated angle grids on [0, pi]."""

import math
from typing import Optional

from ..models import AngleSet


def angle_set(delta: float, max_angle: Optional[float] = None) -> AngleSet:
    """
    {k delta : 0 <= k <= floor(pi/delta)}, optionally truncated at ``max_angle``.

    The untruncated grid is maximal: every point of [0, pi] lies within
    delta of a member.
    """
    if not 0 < delta < math.pi:
        raise ValueError(f"delta must lie in (0, pi), got {delta}")
    top = math.pi if max_angle is None else min(max_angle, math.pi)
    last = math.floor(top / delta)
    while (last + 1) * delta <= top:
        last += 1
    while last > 0 and last * delta > top:
        last -= 1
    return AngleSet(delta=delta, angles=tuple(k * delta for k in range(last + 1)))

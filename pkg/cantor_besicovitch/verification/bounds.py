"""Bound formulas for L(delta, theta) and leb(R_theta ∩ R), and predicted exponents."""

import math
from typing import Optional

from ..errors import RegimeMismatchError
from ..models import RegimeTag
from .regimes import at_least, classify_angle, ladder_r0

S0 = (math.sqrt(5) - 1) / 2


def bound_small(delta: float, s: float, theta: float) -> float:
    """delta^-s * max(delta/|theta|, |theta|^s), for small angles."""
    regime = classify_angle(delta, s, theta)
    if regime.tag != RegimeTag.SMALL:
        raise RegimeMismatchError(f"theta={theta!r} is {regime.tag.value}, not small")
    angle = abs(theta)
    return delta ** (-s) * max(delta / angle, angle**s)


def bound_large(delta: float, s: float, theta: float) -> tuple[float, Optional[float]]:
    """
    First and (when |theta| >= delta^(1-s)) second large-angle bounds.

    first  = delta^-s * max(r0/|theta|, |theta|^s)
    second = |theta|^-s * delta^(-s^2) * max(r0/|theta|, |theta|^s)
    """
    regime = classify_angle(delta, s, theta)
    if not regime.is_large:
        raise RegimeMismatchError(f"theta={theta!r} is {regime.tag.value}, not large")
    angle = abs(theta)
    if angle > 1:
        raise RegimeMismatchError(f"Large-angle bounds assume |theta| <= 1, got {theta!r}")
    factor = max(ladder_r0(s, angle) / angle, angle**s)
    first = delta ** (-s) * factor
    second = None
    if at_least(angle, delta ** (1 - s)):
        second = angle ** (-s) * delta ** (-s * s) * factor
    return first, second


def cl1_bound(delta: float, s: float, theta: float, r: float, count_r: int) -> float:
    """r^s / (|theta| delta^s)^s * L(r, theta)."""
    return r**s / (abs(theta) * delta**s) ** s * count_r


def area_bound_small(delta: float, s: float, theta: float) -> float:
    """delta * max(delta/|theta|, |theta|^s)."""
    angle = abs(theta)
    return delta * max(delta / angle, angle**s)


def area_bound_large(delta: float, s: float, theta: float) -> float:
    """Large-angle bound on leb(R_theta ∩ R), split at |theta| = delta^(1-s)."""
    angle = abs(theta)
    factor = max(ladder_r0(s, min(angle, 1.0)) / angle ** (s + 1), 1.0)
    if at_least(angle, delta ** (1 - s)):
        return delta ** (2 - s * s) / angle * factor
    return delta * angle**s * factor


def area_bound(delta: float, s: float, theta: float) -> float:
    """Regime-dispatched area bound; nan below scale."""
    regime = classify_angle(delta, s, theta)
    if regime.tag == RegimeTag.BELOW_SCALE:
        return math.nan
    if regime.tag == RegimeTag.SMALL:
        return area_bound_small(delta, s, theta)
    return area_bound_large(delta, s, theta)


def predicted_fixed_exponent(s: float) -> float:
    """Exponent e in sum_theta leb(R_theta ∩ R) ~ delta^e log(1/delta)."""
    return min(1 - s * s, 1 / s - 1)


def predicted_double_exponent(s: float) -> float:
    """Exponent of delta in the double sum: min(-s^2, 1/s - 2)."""
    return predicted_fixed_exponent(s) - 1


def predicted_count_exponent(s: float, alpha: Optional[float] = None) -> float:
    """
    Growth exponent of L in 1/delta.

    Fixed angles (``alpha`` None) follow the second large-angle bound, s^2.
    For the schedule theta = delta^alpha in the small regime the small-angle
    bound gives s - min(1 - alpha, alpha s).
    """
    if alpha is None:
        return s * s
    return s - min(1 - alpha, alpha * s)


def easy_floor(s: float) -> float:
    """2 - s."""
    return 2 - s


def theorem_floor(s: float) -> float:
    """min(2 - s^2, 1/s); the branches cross at s = S0."""
    if not 0 < s < 1:
        raise ValueError(f"s must lie in (0, 1), got {s}")
    return min(2 - s * s, 1 / s)

"""Angle regimes and the scale ladder attached to (delta, theta)."""

import math

from ..cantor import a_adic_level
from ..errors import LadderDomainError
from ..models import Regime, RegimeTag, ScaleLadder

# Relative slack applied at regime boundaries; ties go to the larger regime.
TIE_SLACK = 1e-12


def thresholds(delta: float, s: float) -> tuple[float, float]:
    """(beta, gamma) = (min, max) of (delta^s, delta^(1-s))."""
    first, second = delta**s, delta ** (1 - s)
    return min(first, second), max(first, second)


def at_least(value: float, threshold: float) -> bool:
    """value >= threshold up to the boundary slack."""
    return value >= threshold * (1 - TIE_SLACK)


def classify_angle(delta: float, s: float, theta: float) -> Regime:
    """
    Small: delta <= |theta| < beta; Large: |theta| >= beta; VeryLarge: |theta| >= gamma.

    Angles below delta are tagged BELOW_SCALE.
    """
    if not 0 < delta <= 1:
        raise ValueError(f"delta must lie in (0, 1], got {delta}")
    beta, gamma = thresholds(delta, s)
    angle = abs(theta)
    if at_least(angle, gamma):
        tag = RegimeTag.VERY_LARGE
    elif at_least(angle, beta):
        tag = RegimeTag.LARGE
    elif at_least(angle, delta):
        tag = RegimeTag.SMALL
    else:
        tag = RegimeTag.BELOW_SCALE
    return Regime(tag=tag, beta=beta, gamma=gamma)


def ladder_r0(s: float, theta: float) -> float:
    """max(|theta|^(1/s), |theta|^(1/(1-s)))."""
    angle = abs(theta)
    return max(angle ** (1 / s), angle ** (1 / (1 - s)))


def scale_ladder(a: int, delta: float, s: float, theta: float) -> ScaleLadder:
    """Derived scales m, (r0, t, r) and (rho0, k, rho) with their sanity checks."""
    angle = abs(theta)
    if not 0 < angle <= 1:
        raise LadderDomainError(f"Scale ladder needs |theta| in (0, 1], got {theta!r}")

    m = a_adic_level(a, angle)
    r0 = ladder_r0(s, angle)
    t = a_adic_level(a, r0)
    r = float(a) ** (-t)
    rho0 = angle * delta**s
    k = a_adic_level(a, rho0)
    rho = float(a) ** (-k)

    checks = {"theta_le_beta_r": angle <= min(r**s, r ** (1 - s)) * (1 + TIE_SLACK)}
    if at_least(angle, delta ** (1 - s)):
        checks["delta_le_rho0_le_r0"] = delta * (1 - TIE_SLACK) <= rho0 <= r0 * (1 + TIE_SLACK)
        checks["delta_le_rho_le_r_le_1"] = delta * (1 - TIE_SLACK) <= rho <= r <= 1.0

    return ScaleLadder(
        a=a,
        delta=delta,
        theta=theta,
        s=s,
        m=m,
        r0=r0,
        t=t,
        r=r,
        rho0=rho0,
        k=k,
        rho=rho,
        branch="s>=1/2" if s >= 0.5 else "s<=1/2",
        checks=checks,
    )


def log_inverse(delta: float) -> float:
    """log(1/delta)."""
    return -math.log(delta)

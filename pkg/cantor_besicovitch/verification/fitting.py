"""Least-squares exponent fits in log-log coordinates."""

import math
from typing import Iterable, Sequence

import numpy as np

from ..models import ExponentFit


def fit_exponent(points: Sequence[tuple[float, float]]) -> ExponentFit:
    """
    Fit y = slope * x + intercept by ordinary least squares.

    Points are (log(1/delta), log value). The residual is the largest
    absolute deviation from the fitted line.
    """
    if len(points) < 3:
        raise ValueError(f"Exponent fit needs >= 3 points, got {len(points)}")
    xs = np.array([p[0] for p in points], dtype=np.float64)
    ys = np.array([p[1] for p in points], dtype=np.float64)
    if np.ptp(xs) == 0:
        raise ValueError("Exponent fit needs at least two distinct x values")
    slope, intercept = np.polyfit(xs, ys, 1)
    residual = float(np.max(np.abs(ys - (slope * xs + intercept))))
    return ExponentFit(
        slope=float(slope),
        intercept=float(intercept),
        residual=residual,
        points=len(points),
    )


def log_points(deltas: Iterable[float], values: Iterable[float]) -> list[tuple[float, float]]:
    """(log(1/delta), log value) for positive values."""
    return [(-math.log(d), math.log(v)) for d, v in zip(deltas, values) if v > 0]

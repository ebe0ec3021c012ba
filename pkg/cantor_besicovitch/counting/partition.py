"""Partition of intersecting pairs by the fine part x_sma, and multiscale counts."""

from typing import Iterable, Optional, Union

from ..cantor import a_adic_level, decompose, level_cells
from ..errors import UnrealizableSplitError
from ..models import Decomposition, DigitSystem, PairCountRecord, Point
from ..utils.logging import get_logger
from .pairs import count_level

logger = get_logger(__name__)

Xi = tuple[int, int]


def split_level(a: int, theta: float) -> int:
    """m with |theta| in (a^-(m+1), a^-m]."""
    return a_adic_level(a, abs(theta))


def decompositions(sys: DigitSystem, n: int, m: int) -> dict[int, Decomposition]:
    """Index i -> decomposition of the corner of T_i at split level m."""
    return {py + 1: decompose(sys, n, word, m) for word, _, py in level_cells(sys, n)}


def mtheta_partition(
    sys: DigitSystem,
    n: int,
    theta: float,
    omega: Point = (0.0, 0.0),
    record: Optional[PairCountRecord] = None,
) -> dict[Xi, int]:
    """
    xi -> number of intersecting pairs whose first corner has x_sma = xi.

    Every realizable xi appears, with zero when it has no pairs.
    """
    m = split_level(sys.a, theta)
    if not 0 <= m <= n:
        raise UnrealizableSplitError(f"Split level m={m} for theta={theta!r} outside 0..{n}")
    decs = decompositions(sys, n, m)
    record = record or count_level(sys, n, theta, omega, keep_pairs=False)
    counts: dict[Xi, int] = {xi: 0 for xi in sorted({d.xi for d in decs.values()})}
    for i, c in record.per_i.items():
        counts[decs[i].xi] += c
    logger.debug(f"M_theta partition at n={n}, m={m}: {len(counts)} classes, max {max(counts.values())}")
    return counts


def m_theta(
    sys: DigitSystem,
    n: int,
    theta: float,
    omega: Point,
    xi: Union[Xi, Decomposition],
    record: Optional[PairCountRecord] = None,
) -> int:
    """Intersecting pairs (x, y) with x_sma = xi."""
    key = xi.xi if isinstance(xi, Decomposition) else tuple(xi)
    counts = mtheta_partition(sys, n, theta, omega, record)
    if key not in counts:
        raise UnrealizableSplitError(f"Fine part {key} is not realizable at n={n}")
    return counts[key]


def multiscale_counts(
    sys: DigitSystem,
    n: int,
    theta: float,
    omega: Point,
    levels: Iterable[int],
) -> dict[int, int]:
    """L(a^-t, theta) on R_t for each requested level t <= n."""
    counts: dict[int, int] = {}
    for t in sorted(set(levels)):
        if not 0 <= t <= n:
            raise ValueError(f"Level t={t} must satisfy 0 <= t <= n={n}")
        counts[t] = count_level(sys, t, theta, omega, keep_pairs=False).L
    return counts

"""Counting intersecting pairs (T_i, T_{j,theta}): L(delta, theta) and friends."""

import math
import time
from typing import Iterator, Optional, Sequence

from ..cantor import rect_approx
from ..config import get_settings
from ..errors import PairBudgetError
from ..geometry import (
    bboxes_overlap,
    intersection_area,
    rects_intersect,
    rotate_family,
)
from ..models import (
    DigitSystem,
    IntersectResult,
    OrientedRect,
    PairCountRecord,
    PairRecord,
    Point,
)
from ..utils.logging import get_logger
from .grid_index import GridIndex

logger = get_logger(__name__)

IntersectingPair = tuple[OrientedRect, OrientedRect, IntersectResult]
Row = tuple[OrientedRect, int, list[tuple[OrientedRect, IntersectResult]]]


def level_families(
    sys: DigitSystem,
    n: int,
    theta: float,
    omega: Point = (0.0, 0.0),
) -> tuple[list[OrientedRect], list[OrientedRect]]:
    """(R, R_theta) at level n as oriented rectangles."""
    rects = rect_approx(sys, n)
    return rotate_family(rects, 0.0), rotate_family(rects, theta, omega)


def _scales(R: Sequence[OrientedRect]) -> tuple[float, float]:
    """(delta, delta^s) read off the unrotated family."""
    width, height = R[0].side_lengths
    return width / 3, height / 3


def _pair_cap(pair_cap: Optional[int]) -> int:
    return get_settings().numerics.pair_cap if pair_cap is None else pair_cap


def _all_candidates(
    R: Sequence[OrientedRect],
    R_theta: Sequence[OrientedRect],
    pair_cap: Optional[int],
    tol: float,
) -> Iterator[tuple[OrientedRect, Sequence[OrientedRect]]]:
    cap = _pair_cap(pair_cap)
    if len(R) * len(R_theta) > cap:
        raise PairBudgetError(len(R) * len(R_theta), cap)
    for a in R:
        yield a, R_theta


def _indexed_candidates(
    R: Sequence[OrientedRect],
    R_theta: Sequence[OrientedRect],
    pair_cap: Optional[int],
    tol: float,
) -> Iterator[tuple[OrientedRect, Sequence[OrientedRect]]]:
    cap = _pair_cap(pair_cap)
    _, delta_s = _scales(R)
    index = GridIndex(3 * delta_s, R_theta, pad=tol)
    tests = 0
    for a in R:
        candidates = [index.rects[p] for p in index.query(a.bbox)]
        tests += len(candidates)
        if tests > cap:
            raise PairBudgetError(tests, cap)
        yield a, candidates


_SCANNERS = {"brute": _all_candidates, "fast": _indexed_candidates}


def _rows(
    R: Sequence[OrientedRect],
    R_theta: Sequence[OrientedRect],
    method: str,
    pair_cap: Optional[int],
) -> Iterator[Row]:
    """Per T_i: (T_i, candidates tested, intersecting partners in j order)."""
    if method not in _SCANNERS:
        raise ValueError(f"Unknown counting method {method!r}")
    if not R or not R_theta:
        return
    eps = get_settings().numerics.eps_geom
    tol = eps * max(R[0].diagonal, R_theta[0].diagonal)
    for a, candidates in _SCANNERS[method](R, R_theta, pair_cap, tol):
        box = a.bbox
        hits = []
        for b in candidates:
            if not bboxes_overlap(box, b.bbox, tol):
                continue
            result = rects_intersect(a, b)
            if result.intersects:
                hits.append((b, result))
        yield a, len(candidates), hits


def intersecting_pairs(
    R: Sequence[OrientedRect],
    R_theta: Sequence[OrientedRect],
    method: str = "fast",
    pair_cap: Optional[int] = None,
) -> Iterator[IntersectingPair]:
    """Intersecting pairs in (i, then j) order; Marginal verdicts included."""
    for a, _, hits in _rows(R, R_theta, method, pair_cap):
        for b, result in hits:
            yield a, b, result


def _count(
    R: Sequence[OrientedRect],
    R_theta: Sequence[OrientedRect],
    method: str,
    keep_pairs: bool,
    pair_cap: Optional[int],
) -> PairCountRecord:
    start = time.perf_counter()
    list_cap = get_settings().numerics.pair_list_cap
    per_i = {a.index: 0 for a in R}
    pairs: list[PairRecord] = []
    truncated = False
    total = 0
    tests = 0

    for a, tested, hits in _rows(R, R_theta, method, pair_cap):
        tests += tested
        total += len(hits)
        per_i[a.index] += len(hits)
        if not keep_pairs:
            continue
        for b, _ in hits:
            if len(pairs) < list_cap:
                pairs.append(PairRecord(i=a.index, j=b.index, x=a.corners[0], y_theta=b.corners[0]))
            else:
                truncated = True

    if truncated:
        logger.warning(f"Pair list truncated at {list_cap} records (L={total})")

    if R:
        n = R[0].source[0]
        delta, _ = _scales(R)
    else:
        n, delta = 0, math.nan
    theta = R_theta[0].theta if R_theta else 0.0
    omega = R_theta[0].omega if R_theta else (0.0, 0.0)
    record = PairCountRecord(
        n=n,
        delta=delta,
        theta=theta,
        omega=omega,
        L=total,
        max_per_i=max(per_i.values(), default=0),
        per_i=per_i,
        pairs=pairs,
        pairs_truncated=truncated,
        method=method,
        tests=tests,
        elapsed_ms=(time.perf_counter() - start) * 1000,
    )
    logger.debug(
        f"L(n={n}, theta={theta!r}) = {total} via {method} ({tests} tests, max/i {record.max_per_i})"
    )
    return record


def count_pairs_bruteforce(
    R: Sequence[OrientedRect],
    R_theta: Sequence[OrientedRect],
    keep_pairs: bool = True,
    pair_cap: Optional[int] = None,
) -> PairCountRecord:
    """Exact L over all ordered pairs; the oracle for the indexed counter."""
    return _count(R, R_theta, "brute", keep_pairs, pair_cap)


def count_pairs_fast(
    R: Sequence[OrientedRect],
    R_theta: Sequence[OrientedRect],
    keep_pairs: bool = True,
    pair_cap: Optional[int] = None,
) -> PairCountRecord:
    """Exact L using a grid index with cell 3 delta^s over R_theta."""
    return _count(R, R_theta, "fast", keep_pairs, pair_cap)


def per_rect_counts(
    R: Sequence[OrientedRect],
    R_theta: Sequence[OrientedRect],
) -> dict[int, int]:
    """i -> #{j : T_i meets T_{j,theta}}, zeros included."""
    return count_pairs_fast(R, R_theta, keep_pairs=False).per_i


def pairwise_area_sum(
    R: Sequence[OrientedRect],
    R_theta: Sequence[OrientedRect],
) -> float:
    """Sum of leb(T_i ∩ T_{j,theta}) over intersecting pairs."""
    total = 0.0
    for a, b, result in intersecting_pairs(R, R_theta):
        total += intersection_area(a, b, result)
    return total


def count_level(
    sys: DigitSystem,
    n: int,
    theta: float,
    omega: Point = (0.0, 0.0),
    method: str = "fast",
    keep_pairs: bool = True,
    pair_cap: Optional[int] = None,
) -> PairCountRecord:
    """L(a^-n, theta) for one system and translation."""
    R, R_theta = level_families(sys, n, theta, omega)
    if method == "brute":
        return count_pairs_bruteforce(R, R_theta, keep_pairs, pair_cap)
    return count_pairs_fast(R, R_theta, keep_pairs, pair_cap)

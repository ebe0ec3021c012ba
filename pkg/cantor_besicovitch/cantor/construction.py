"""Level-n generations of C, Cantor-graph anchors and rectangle approximations."""

from functools import lru_cache
from typing import Optional, Union

from ..config import get_settings
from ..errors import EnumerationCapError, UnrealizableSplitError
from ..models import (
    AnchorPoint,
    Decomposition,
    DigitSystem,
    GridRect,
    LatticeInterval,
    Word,
)
from ..utils.logging import get_logger

logger = get_logger(__name__)

# (word, X, Y) with X over a^n and Y over b^n
LevelCell = tuple[Word, int, int]


def check_enumeration(sys: DigitSystem, n: int, cap: Optional[int] = None) -> None:
    """Raise EnumerationCapError when b^n words exceed the cap."""
    if n < 0:
        raise ValueError(f"Level must be >= 0, got n={n}")
    cap = get_settings().numerics.enumeration_cap if cap is None else cap
    if sys.b**n > cap:
        raise EnumerationCapError(sys.b, n, cap)


@lru_cache(maxsize=64)
def _level_cells(sys: DigitSystem, n: int) -> tuple[LevelCell, ...]:
    cells: list[LevelCell] = [((), 0, 0)]
    for _ in range(n):
        refined: list[LevelCell] = []
        for word, px, py in cells:
            digits, images = sys.branch(word)
            for digit, image in zip(digits, images):
                refined.append((word + (digit,), px * sys.a + digit, py * sys.b + image))
        cells = refined
    return tuple(cells)


def level_cells(sys: DigitSystem, n: int, cap: Optional[int] = None) -> tuple[LevelCell, ...]:
    """
    All admissible level-n words with their lattice numerators.

    Words come out in lexicographic order, which is left-to-right order of
    the intervals since every digit set is sorted.
    """
    check_enumeration(sys, n, cap)
    cells = _level_cells(sys, n)
    logger.debug(f"Enumerated {len(cells)} words of {sys.label} at n={n}")
    return cells


def cantor_intervals(
    sys: DigitSystem, n: int, cap: Optional[int] = None
) -> list[LatticeInterval]:
    """The b^n closed intervals of C_n, left to right."""
    return [LatticeInterval(n=n, start=px, a=sys.a) for _, px, _ in level_cells(sys, n, cap)]


def graph_anchors(sys: DigitSystem, n: int, cap: Optional[int] = None) -> list[AnchorPoint]:
    """Anchor points of the level-n words, ordered by x."""
    return [
        AnchorPoint(n=n, px=px, py=py, a=sys.a, b=sys.b, word=word)
        for word, px, py in level_cells(sys, n, cap)
    ]


def rect_approx(sys: DigitSystem, n: int, cap: Optional[int] = None) -> list[GridRect]:
    """
    The enlarged rectangles T_1..T_{b^n} of R_n, in vertical order.

    T_i is the 3x3 block of lattice cells centred on the anchor cell, so its
    corner sits one lattice unit below-left of the anchor.
    """
    rects = [
        GridRect(n=n, index=py + 1, px=px - 1, py=py - 1, a=sys.a, b=sys.b, word=word)
        for word, px, py in level_cells(sys, n, cap)
    ]
    rects.sort(key=lambda r: r.index)
    return rects


def core_cells(sys: DigitSystem, n: int, cap: Optional[int] = None) -> list[GridRect]:
    """Unenlarged 1/a^n x 1/b^n anchor cells, in vertical order."""
    cells = [
        GridRect(
            n=n,
            index=py + 1,
            px=px,
            py=py,
            a=sys.a,
            b=sys.b,
            width_units=1,
            height_units=1,
            word=word,
        )
        for word, px, py in level_cells(sys, n, cap)
    ]
    cells.sort(key=lambda r: r.index)
    return cells


def word_for_index(sys: DigitSystem, n: int, i: int, cap: Optional[int] = None) -> Word:
    """The level-n word whose rectangle has vertical index i."""
    if not 1 <= i <= sys.b**n:
        raise ValueError(f"Index {i} out of range 1..{sys.b**n} at n={n}")
    for word, _, py in level_cells(sys, n, cap):
        if py + 1 == i:
            return word
    raise AssertionError("sigma images do not cover every vertical rank")


def vertical_index(sys: DigitSystem, word: Word) -> int:
    """i = 1 + sum_j sigma_(x_1..x_{j-1})(x_j) b^(n-j)."""
    y = 0
    for j, digit in enumerate(word):
        y = y * sys.b + sys.sigma_map(word[:j])[digit]
    return y + 1


def decompose(
    sys: DigitSystem,
    n: int,
    target: Union[int, Word],
    m: int,
) -> Decomposition:
    """
    Split the corner x of T_i as x_lar + x_sma at level m.

    ``target`` is either the vertical index i or the level-n word. The coarse
    part collects the first m digits; the fine part the remaining digits
    together with the (-1/a^n, -1/b^n) corner offset.
    """
    if not 0 <= m <= n:
        raise UnrealizableSplitError(f"Split level m={m} outside 0..{n}")
    word = word_for_index(sys, n, target) if isinstance(target, int) else tuple(target)
    if len(word) != n or not sys.is_admissible(word):
        raise UnrealizableSplitError(f"Word {word} is not an admissible level-{n} word")

    lar_x = lar_y = sma_x = sma_y = 0
    for j, digit in enumerate(word):
        image = sys.sigma_map(word[:j])[digit]
        if j < m:
            lar_x = lar_x * sys.a + digit
            lar_y = lar_y * sys.b + image
        else:
            sma_x = sma_x * sys.a + digit
            sma_y = sma_y * sys.b + image

    return Decomposition(
        n=n,
        m=m,
        a=sys.a,
        b=sys.b,
        lar_x=lar_x,
        lar_y=lar_y,
        sma_x=sma_x - 1,
        sma_y=sma_y - 1,
    )


def parent_index(sys: DigitSystem, i: int, n: int, m: int) -> int:
    """Index of the enlarged level-m rectangle containing the level-n T_i."""
    if not 0 <= m <= n:
        raise ValueError(f"Parent level m={m} must satisfy 0 <= m <= n={n}")
    if not 1 <= i <= sys.b**n:
        raise ValueError(f"Index {i} out of range 1..{sys.b**n} at n={n}")
    return (i - 1) // sys.b ** (n - m) + 1


def children(sys: DigitSystem, parent: int, m: int, n: int) -> range:
    """Level-n indices whose level-m parent is ``parent`` (b^(n-m) of them)."""
    if not 0 <= m <= n:
        raise ValueError(f"Parent level m={m} must satisfy 0 <= m <= n={n}")
    span = sys.b ** (n - m)
    return range((parent - 1) * span + 1, parent * span + 1)

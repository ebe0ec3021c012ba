"""Exact lattice objects: intervals, anchors, grid rectangles, decompositions.

All coordinates are integer numerators over a^n (x) and b^n (y); Fractions are
produced on demand and never rounded.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .digits import Word


@dataclass(frozen=True)
class LatticeInterval:
    """Closed interval [start/a^n, (start+1)/a^n] of the level-n generation C_n."""

    n: int
    start: int
    a: int

    @property
    def lo(self) -> Fraction:
        return Fraction(self.start, self.a**self.n)

    @property
    def hi(self) -> Fraction:
        return Fraction(self.start + 1, self.a**self.n)

    @property
    def length(self) -> Fraction:
        return Fraction(1, self.a**self.n)


@dataclass(frozen=True)
class AnchorPoint:
    """Cantor-graph anchor (sum x_j/a^j, sum sigma(x_j)/b^j) of a level-n word."""

    n: int
    px: int  # units of 1/a^n
    py: int  # units of 1/b^n
    a: int
    b: int
    word: Word = ()

    @property
    def x(self) -> Fraction:
        return Fraction(self.px, self.a**self.n)

    @property
    def y(self) -> Fraction:
        return Fraction(self.py, self.b**self.n)

    @property
    def index(self) -> int:
        """Vertical rank 1..b^n."""
        return self.py + 1


@dataclass(frozen=True)
class GridRect:
    """Axis-aligned rectangle with corners on the (1/a^n, 1/b^n) lattice."""

    n: int
    index: int
    px: int  # x-corner numerator, units of 1/a^n
    py: int  # y-corner numerator, units of 1/b^n
    a: int
    b: int
    width_units: int = 3
    height_units: int = 3
    word: Word = ()

    @property
    def a_pow(self) -> int:
        return self.a**self.n

    @property
    def b_pow(self) -> int:
        return self.b**self.n

    @property
    def x0(self) -> Fraction:
        return Fraction(self.px, self.a_pow)

    @property
    def x1(self) -> Fraction:
        return Fraction(self.px + self.width_units, self.a_pow)

    @property
    def y0(self) -> Fraction:
        return Fraction(self.py, self.b_pow)

    @property
    def y1(self) -> Fraction:
        return Fraction(self.py + self.height_units, self.b_pow)

    @property
    def width(self) -> Fraction:
        return Fraction(self.width_units, self.a_pow)

    @property
    def height(self) -> Fraction:
        return Fraction(self.height_units, self.b_pow)

    @property
    def area(self) -> Fraction:
        return self.width * self.height

    @property
    def corners(self) -> tuple[tuple[Fraction, Fraction], ...]:
        """Counterclockwise from the bottom-left corner."""
        return (
            (self.x0, self.y0),
            (self.x1, self.y0),
            (self.x1, self.y1),
            (self.x0, self.y1),
        )

    def contains(self, other: "GridRect") -> bool:
        """Exact closed containment of another lattice rectangle."""
        return (
            self.x0 <= other.x0
            and other.x1 <= self.x1
            and self.y0 <= other.y0
            and other.y1 <= self.y1
        )

    def contains_point(self, x: Fraction, y: Fraction) -> bool:
        return self.x0 <= x <= self.x1 and self.y0 <= y <= self.y1

    def to_row(self) -> dict[str, Any]:
        """CSV row (n, i, px, py, a_pow, b_pow)."""
        return {
            "n": self.n,
            "i": self.index,
            "px": self.px,
            "py": self.py,
            "a_pow": self.a_pow,
            "b_pow": self.b_pow,
        }


@dataclass(frozen=True)
class Decomposition:
    """
    Split of a bottom-left corner x = x_lar + x_sma at level m.

    ``lar_x``/``lar_y`` are numerators over a^m/b^m (first m digits);
    ``sma_x``/``sma_y`` are numerators over a^n/b^n (remaining digits minus
    one lattice unit in each axis).
    """

    n: int
    m: int
    a: int
    b: int
    lar_x: int
    lar_y: int
    sma_x: int
    sma_y: int

    @property
    def x_lar(self) -> tuple[Fraction, Fraction]:
        return Fraction(self.lar_x, self.a**self.m), Fraction(self.lar_y, self.b**self.m)

    @property
    def x_sma(self) -> tuple[Fraction, Fraction]:
        return Fraction(self.sma_x, self.a**self.n), Fraction(self.sma_y, self.b**self.n)

    @property
    def xi(self) -> tuple[int, int]:
        """Hashable key of the fine part."""
        return self.sma_x, self.sma_y

    def recompose(self) -> tuple[Fraction, Fraction]:
        """x_lar + x_sma, exactly."""
        (lx, ly), (sx, sy) = self.x_lar, self.x_sma
        return lx + sx, ly + sy

    def lar_x_fine(self) -> int:
        """pr_x(x_lar) in units of 1/a^n."""
        return self.lar_x * self.a ** (self.n - self.m)

    def lar_y_fine(self) -> int:
        """pr_y(x_lar) in units of 1/b^n."""
        return self.lar_y * self.b ** (self.n - self.m)

"""Pair counts over (n, theta, omega) grids."""

from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence, Union

from ..models import DigitSystem, OmegaPolicy, PairCountRecord, Point
from ..parallel import run_cells
from ..utils.logging import get_logger
from .pairs import count_level

logger = get_logger(__name__)

ThetaGrid = Union[Sequence[float], Callable[[int], Sequence[float]]]
OmegaSet = Union[OmegaPolicy, Sequence[Point]]


@dataclass(frozen=True)
class CountCell:
    """One independent counting job."""

    system: DigitSystem
    n: int
    theta: float
    omega: Point
    method: str = "fast"
    keep_pairs: bool = False
    pair_cap: Optional[int] = None


def thetas_at(theta_grid: ThetaGrid, n: int) -> list[float]:
    """Angles for level n from a fixed list or a per-level rule."""
    return list(theta_grid(n)) if callable(theta_grid) else list(theta_grid)


def omegas_at(omega_set: OmegaSet, theta: float) -> list[Point]:
    if isinstance(omega_set, OmegaPolicy):
        return omega_set.omegas_for(theta)
    return list(omega_set) or [(0.0, 0.0)]


def sweep_cells(
    sys: DigitSystem,
    n_range: Iterable[int],
    theta_grid: ThetaGrid,
    omega_set: OmegaSet,
    method: str = "fast",
    keep_pairs: bool = False,
    pair_cap: Optional[int] = None,
) -> list[CountCell]:
    """Cells ordered by (n, theta position, omega position)."""
    return [
        CountCell(sys, n, theta, omega, method, keep_pairs, pair_cap)
        for n in n_range
        for theta in thetas_at(theta_grid, n)
        for omega in omegas_at(omega_set, theta)
    ]


def count_cell(cell: CountCell) -> PairCountRecord:
    return count_level(
        cell.system,
        cell.n,
        cell.theta,
        cell.omega,
        method=cell.method,
        keep_pairs=cell.keep_pairs,
        pair_cap=cell.pair_cap,
    )


def count_sweep(
    sys: DigitSystem,
    n_range: Iterable[int],
    theta_grid: ThetaGrid,
    omega_set: OmegaSet,
    method: str = "fast",
    keep_pairs: bool = False,
    pair_cap: Optional[int] = None,
    jobs: int = 1,
) -> list[PairCountRecord]:
    """Count every cell of the grid; records come back in cell order."""
    cells = sweep_cells(sys, n_range, theta_grid, omega_set, method, keep_pairs, pair_cap)
    logger.info(f"Counting {len(cells)} cells for {sys.label}")
    return run_cells(count_cell, cells, jobs)

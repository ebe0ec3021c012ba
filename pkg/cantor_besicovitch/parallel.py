"""Order-preserving fan-out of independent grid cells."""

from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Sequence, TypeVar

from .utils.logging import get_logger

logger = get_logger(__name__)

C = TypeVar("C")
R = TypeVar("R")


def run_cells(fn: Callable[[C], R], cells: Sequence[C], jobs: int = 1) -> list[R]:
    """
    Apply ``fn`` to every cell and return results in input order.

    ``fn`` must be a module-level function when ``jobs > 1``. Worker processes
    do not see settings installed with ``configure()``; pass caps in the cell.
    """
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")
    if jobs == 1 or len(cells) <= 1:
        return [fn(cell) for cell in cells]

    workers = min(jobs, len(cells))
    logger.debug(f"Dispatching {len(cells)} cells to {workers} workers")
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, cells))

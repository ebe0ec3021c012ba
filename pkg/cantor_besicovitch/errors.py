"""Exception hierarchy for cantor-besicovitch."""

from typing import Optional


class CantorBesicovitchError(Exception):
    """Base class for all package errors."""


class ResourceError(CantorBesicovitchError):
    """A configured desk-scale resource cap would be exceeded."""

    def __init__(self, message: str, cap: int, requested: int):
        super().__init__(message)
        self.cap = cap
        self.requested = requested


class EnumerationCapError(ResourceError):
    """Too many words (b^n) to enumerate."""

    def __init__(self, b: int, n: int, cap: int):
        requested = b**n
        super().__init__(
            f"Level n={n} needs {requested} words (b={b}), above enumeration cap {cap}",
            cap=cap,
            requested=requested,
        )


class PairBudgetError(ResourceError):
    """Pair-test budget exceeded during counting."""

    def __init__(self, requested: int, cap: int):
        super().__init__(
            f"Counting needs {requested} pair tests, above pair budget {cap}",
            cap=cap,
            requested=requested,
        )


class RasterCapError(ResourceError):
    """Raster would materialize too many cells."""

    def __init__(self, requested: int, cap: int):
        super().__init__(
            f"Raster needs {requested} cells, above raster cap {cap}",
            cap=cap,
            requested=requested,
        )


class DegenerateRectangleError(CantorBesicovitchError, ValueError):
    """A rectangle with a zero-length side."""


class RegimeMismatchError(CantorBesicovitchError, ValueError):
    """A bound was requested for an angle outside its regime."""


class LadderDomainError(CantorBesicovitchError, ValueError):
    """Scale ladder requested for an angle outside (0, 1]."""


class UnrealizableSplitError(CantorBesicovitchError, ValueError):
    """Split level out of range or fine part not realizable."""


class MissingDataError(CantorBesicovitchError, ValueError):
    """A check needs data (e.g. corner records) that was not collected."""


class OracleMismatchError(CantorBesicovitchError):
    """Fast counter disagrees with the brute-force oracle."""

    def __init__(self, fast: int, brute: int, context: str = ""):
        super().__init__(f"Fast count {fast} != brute-force count {brute} {context}".strip())
        self.fast = fast
        self.brute = brute


class ConfigError(CantorBesicovitchError, ValueError):
    """Invalid run configuration, with one message per offending field."""

    def __init__(self, problems: list[str], message: Optional[str] = None):
        self.problems = list(problems)
        super().__init__(message or "Invalid configuration: " + "; ".join(self.problems))


class WallClockError(CantorBesicovitchError):
    """The configured wall-clock budget ran out."""

    def __init__(self, elapsed: float, budget: float):
        super().__init__(f"Run took {elapsed:.1f}s, above the wall-clock budget of {budget:.1f}s")
        self.elapsed = elapsed
        self.budget = budget

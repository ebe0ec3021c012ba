"""Angle families and translation policies."""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Iterable, Optional, Sequence

from ..utils.hash import SeededStream
from .digits import DigitSystem
from .oriented import Point
from .records import AreaBracket


@dataclass(frozen=True)
class AngleSet:
    """The maximal delta-separated grid {k*delta : 0 <= k <= floor(pi/delta)}."""

    delta: float
    angles: tuple[float, ...]

    def __len__(self) -> int:
        return len(self.angles)

    def __iter__(self):
        return iter(self.angles)

    @property
    def max_k(self) -> int:
        return len(self.angles) - 1


class OmegaKind(str, Enum):
    """Translation policy kinds."""

    ZERO = "zero"
    RANDOM = "random"
    TABLE = "table"


@dataclass(frozen=True)
class OmegaPolicy:
    """
    Translations omega_theta as a pure function of (seed, theta).

    ``samples`` random draws per angle, optionally preceded by the zero vector.
    """

    kind: OmegaKind = OmegaKind.ZERO
    radius: float = 0.0
    samples: int = 1
    include_zero: bool = False
    seed: int = 0
    table: tuple[tuple[float, float, float], ...] = ()  # (theta, wx, wy)

    @property
    def is_zero(self) -> bool:
        return self.kind == OmegaKind.ZERO

    def omegas_for(self, theta: float) -> list[Point]:
        """All translations attached to one angle."""
        if self.kind == OmegaKind.ZERO:
            return [(0.0, 0.0)]
        if self.kind == OmegaKind.TABLE:
            hits = [(wx, wy) for th, wx, wy in self.table if math.isclose(th, theta, abs_tol=1e-12)]
            return hits or [(0.0, 0.0)]
        out: list[Point] = [(0.0, 0.0)] if self.include_zero else []
        for j in range(self.samples):
            stream = SeededStream(f"omega|{self.seed}|{theta!r}|{j}")
            # Uniform in the disc of the given radius
            rho = self.radius * math.sqrt(stream.uniform())
            phi = 2 * math.pi * stream.uniform()
            out.append((rho * math.cos(phi), rho * math.sin(phi)))
        return out

    def omega_for(self, theta: float) -> Point:
        """The first translation for an angle."""
        return self.omegas_for(theta)[0]

    @classmethod
    def from_table(cls, rows: Iterable[Sequence[float]]) -> "OmegaPolicy":
        """Explicit (theta, wx, wy) rows; angles without a row get the zero vector."""
        table = []
        for row in rows:
            if len(row) != 3:
                raise ValueError(f"omega table rows are [theta, wx, wy], got {list(row)}")
            table.append((float(row[0]), float(row[1]), float(row[2])))
        if not table:
            raise ValueError("omega table is empty")
        return cls(kind=OmegaKind.TABLE, table=tuple(sorted(table)))

    @classmethod
    def parse(
        cls, spec: str, seed: int = 0, table: Iterable[Sequence[float]] = ()
    ) -> "OmegaPolicy":
        """Parse ``zero``, ``random:R``, ``random:R:N``, ``mixed:R:N`` or ``table``."""
        parts = spec.strip().split(":")
        kind = parts[0].lower()
        if kind == "zero" and len(parts) == 1:
            return cls()
        if kind == "table" and len(parts) == 1:
            return cls.from_table(table)
        if kind in ("random", "mixed") and len(parts) in (2, 3):
            radius = float(parts[1])
            samples = int(parts[2]) if len(parts) == 3 else 1
            if radius < 0 or samples < 1:
                raise ValueError(f"Invalid omega spec {spec!r}: radius >= 0 and N >= 1 required")
            return cls(
                kind=OmegaKind.RANDOM,
                radius=radius,
                samples=samples,
                include_zero=(kind == "mixed"),
                seed=seed,
            )
        raise ValueError(f"Invalid omega spec {spec!r}: use zero | random:R[:N] | mixed:R:N | table")

    def to_spec(self) -> str:
        if self.kind == OmegaKind.ZERO:
            return "zero"
        if self.kind == OmegaKind.TABLE:
            return "table"
        prefix = "mixed" if self.include_zero else "random"
        return f"{prefix}:{self.radius!r}:{self.samples}"


@dataclass(frozen=True)
class EnsembleConfig:
    """A digit system at level n with a translation policy."""

    system: DigitSystem
    n: int
    omega: OmegaPolicy = field(default_factory=OmegaPolicy)

    @property
    def delta(self) -> float:
        return 1.0 / self.system.a**self.n

    @property
    def delta_s(self) -> float:
        """delta^s, exactly 1/b^n."""
        return 1.0 / self.system.b**self.n

    def to_dict(self) -> dict[str, Any]:
        return {"system": self.system.to_dict(), "n": self.n, "omega": self.omega.to_spec()}


@dataclass(frozen=True)
class OverlapEntry:
    """leb(R_phi ∩ R) at one angle difference phi = k delta."""

    k: int
    phi: float
    bracket: AreaBracket
    pairwise_sum: float  # Sum of pairwise intersection areas (over-counts)
    area_bound: float  # Per-angle bound, nan below scale

    def to_row(self) -> dict[str, Any]:
        return {
            "k": self.k,
            "phi": self.phi,
            "inner": self.bracket.inner,
            "center": self.bracket.center,
            "outer": self.bracket.outer,
            "pairwise_sum": self.pairwise_sum,
            "area_bound": self.area_bound,
        }


@dataclass(frozen=True)
class DoubleSumReport:
    """sum over theta, theta' in A of leb(R_theta ∩ R_theta'), with comparisons."""

    n: int
    delta: float
    angles: int
    diagonal: float  # |A| leb(R)
    total: AreaBracket
    pairwise_upper: float
    fixed_sum: AreaBracket  # sum over theta of leb(R_theta ∩ R)
    fixed_comparison: float  # max(delta^(1-s^2), delta^(1/s-1)) log(1/delta)
    double_comparison: float  # fixed_comparison / delta
    branch: str

    @property
    def fixed_ratio(self) -> float:
        return self.fixed_sum.center / self.fixed_comparison

    @property
    def double_ratio(self) -> float:
        return self.total.center / self.double_comparison

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "delta": self.delta,
            "angles": self.angles,
            "diagonal": self.diagonal,
            "total": self.total.to_dict(),
            "pairwise_upper": self.pairwise_upper,
            "fixed_sum": self.fixed_sum.to_dict(),
            "fixed_comparison": self.fixed_comparison,
            "double_comparison": self.double_comparison,
            "fixed_ratio": self.fixed_ratio,
            "double_ratio": self.double_ratio,
            "branch": self.branch,
        }


@dataclass(frozen=True)
class GammaMeasure:
    """Raster bracket of the delta-neighbourhood of a rotated anchor cloud."""

    theta: float
    depth: int
    bracket: AreaBracket
    contained: bool  # Every inner cell lies in R_theta

    def to_dict(self) -> dict[str, Any]:
        return {
            "theta": self.theta,
            "depth": self.depth,
            "bracket": self.bracket.to_dict(),
            "contained": self.contained,
        }


@dataclass(frozen=True)
class ChainReport:
    """The Cauchy-Schwarz chain LHS <= sqrt(MID) sqrt(RHS) at one scale."""

    n: int
    delta: float
    angles: int
    lhs: AreaBracket  # sum over theta of leb(Gamma_theta(delta))
    mid: AreaBracket  # leb(E(delta))
    rhs: AreaBracket  # double sum
    holds: bool
    implied_lower: float  # LHS^2 / RHS, certified lower estimate of leb(E(delta))
    dimension: float  # From the implied lower estimate
    dimension_log: float  # Same, log-corrected
    dimension_measured: Optional[float]  # From the rasterized MID
    gamma_contained: bool

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "delta": self.delta,
            "angles": self.angles,
            "lhs": self.lhs.to_dict(),
            "mid": self.mid.to_dict(),
            "rhs": self.rhs.to_dict(),
            "holds": self.holds,
            "implied_lower": self.implied_lower,
            "dimension": self.dimension,
            "dimension_log": self.dimension_log,
            "dimension_measured": self.dimension_measured,
            "gamma_contained": self.gamma_contained,
        }

"""Result records: pair counts, regimes, scale ladders, bound reports, fits."""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Optional

from .oriented import Point


@dataclass(frozen=True)
class PairRecord:
    """One intersecting pair (T_i, T_{j,theta}) with bottom-left corner data."""

    i: int
    j: int
    x: Point  # Bottom-left corner of T_i
    y_theta: Point  # Image of the bottom-left corner of T_j


@dataclass
class PairCountRecord:
    """Result of counting L(delta, theta) on one instance."""

    n: int
    delta: float
    theta: float
    omega: Point
    L: int
    max_per_i: int
    per_i: dict[int, int] = field(default_factory=dict)
    pairs: list[PairRecord] = field(default_factory=list)
    pairs_truncated: bool = False
    method: str = "fast"
    tests: int = 0
    elapsed_ms: float = 0.0

    def to_row(self, timings: bool = False) -> dict[str, Any]:
        """counts.csv columns owned by the record."""
        return {
            "n": self.n,
            "delta": self.delta,
            "theta": self.theta,
            "omega_x": self.omega[0],
            "omega_y": self.omega[1],
            "L": self.L,
            "max_per_i": self.max_per_i,
            "method": self.method,
            "elapsed_ms": round(self.elapsed_ms, 3) if timings else "",
        }


class RegimeTag(str, Enum):
    """Angle regimes relative to delta."""

    BELOW_SCALE = "below_scale"  # |theta| < delta
    SMALL = "small"
    LARGE = "large"
    VERY_LARGE = "very_large"


@dataclass(frozen=True)
class Regime:
    """Regime of an angle with the thresholds beta and gamma."""

    tag: RegimeTag
    beta: float
    gamma: float

    @property
    def is_small(self) -> bool:
        return self.tag == RegimeTag.SMALL

    @property
    def is_large(self) -> bool:
        """Very large angles are also large."""
        return self.tag in (RegimeTag.LARGE, RegimeTag.VERY_LARGE)


@dataclass(frozen=True)
class ScaleLadder:
    """Auxiliary scales attached to (delta, theta)."""

    a: int
    delta: float
    theta: float
    s: float
    m: int  # |theta| in (a^-(m+1), a^-m]
    r0: float
    t: int
    r: float  # a^-t with r0 in (a^-(t+1), a^-t]
    rho0: float
    k: int
    rho: float  # a^-k with rho0 in (a^-(k+1), a^-k]
    branch: str  # "s>=1/2" or "s<=1/2"
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def valid(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> dict[str, Any]:
        return {
            "a": self.a,
            "delta": self.delta,
            "theta": self.theta,
            "s": self.s,
            "m": self.m,
            "r0": self.r0,
            "t": self.t,
            "r": self.r,
            "rho0": self.rho0,
            "k": self.k,
            "rho": self.rho,
            "branch": self.branch,
            "checks": dict(self.checks),
        }


@dataclass
class BoundReport:
    """Measured quantity against a bound, aggregated over instances."""

    lemma: str
    exact_constant: bool  # True: bound asserted verbatim; False: fitted constant
    bound: float = math.nan  # Constant or formula value compared against
    instances: int = 0
    measured_max: float = 0.0
    constant: float = 0.0  # max(measured / bound)
    passed: Optional[bool] = None
    skipped: int = 0
    per_level: dict[int, float] = field(default_factory=dict)  # n -> max ratio
    notes: list[str] = field(default_factory=list)

    def observe(self, measured: float, bound: float, n: Optional[int] = None) -> None:
        """Record one instance; exact-constant reports fail on measured > bound."""
        self.instances += 1
        self.measured_max = max(self.measured_max, measured)
        ratio = measured / bound if bound > 0 else (math.inf if measured > 0 else 0.0)
        self.constant = max(self.constant, ratio)
        if n is not None:
            self.per_level[n] = max(self.per_level.get(n, 0.0), ratio)
        if self.exact_constant:
            ok = measured <= bound
            self.passed = ok if self.passed is None else (self.passed and ok)

    def fail(self, note: str) -> None:
        self.passed = False
        self.notes.append(note)

    def note(self, text: str) -> None:
        if text not in self.notes:
            self.notes.append(text)

    @property
    def stability(self) -> float:
        """max/min of the per-level fitted constants (1.0 when flat)."""
        values = [v for v in self.per_level.values() if v > 0]
        if len(values) < 2:
            return 1.0
        return max(values) / min(values)

    def settle_fitted(self, factor: float) -> None:
        """Fitted-constant pass: finite constant that is stable across levels."""
        if self.exact_constant or self.instances == 0:
            return
        self.passed = math.isfinite(self.constant) and self.stability < factor

    def merge(self, other: "BoundReport") -> "BoundReport":
        """Combine two reports for the same lemma."""
        if other.lemma != self.lemma:
            raise ValueError(f"Cannot merge {other.lemma} into {self.lemma}")
        self.instances += other.instances
        self.skipped += other.skipped
        self.measured_max = max(self.measured_max, other.measured_max)
        self.constant = max(self.constant, other.constant)
        for n, v in other.per_level.items():
            self.per_level[n] = max(self.per_level.get(n, 0.0), v)
        if other.passed is not None:
            self.passed = other.passed if self.passed is None else (self.passed and other.passed)
        for text in other.notes:
            self.note(text)
        if math.isnan(self.bound):
            self.bound = other.bound
        return self

    def to_dict(self) -> dict[str, Any]:
        return {
            "lemma": self.lemma,
            "exact_constant": self.exact_constant,
            "instances": self.instances,
            "skipped": self.skipped,
            "measured_max": self.measured_max,
            "bound": self.bound,
            "constant": self.constant,
            "stability": self.stability,
            "pass": self.passed,
            "per_level": {str(n): v for n, v in sorted(self.per_level.items())},
            "notes": list(self.notes),
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "BoundReport":
        return cls(
            lemma=data["lemma"],
            exact_constant=data.get("exact_constant", False),
            bound=data.get("bound", math.nan),
            instances=data.get("instances", 0),
            measured_max=data.get("measured_max", 0.0),
            constant=data.get("constant", 0.0),
            passed=data.get("pass"),
            skipped=data.get("skipped", 0),
            per_level={int(n): v for n, v in data.get("per_level", {}).items()},
            notes=list(data.get("notes", [])),
        )


@dataclass(frozen=True)
class ExponentFit:
    """Least-squares line through (log(1/delta), log value) points."""

    slope: float
    intercept: float
    residual: float  # Max absolute deviation from the fitted line
    points: int

    def to_dict(self) -> dict[str, Any]:
        return {
            "slope": self.slope,
            "intercept": self.intercept,
            "residual": self.residual,
            "points": self.points,
        }


@dataclass(frozen=True)
class AreaBracket:
    """Raster estimate of a planar measure with certified inner/outer bounds."""

    inner: float  # Cells entirely inside one convex piece
    center: float  # Cells whose centre is covered
    outer: float  # Cells touching the union
    cell: float
    cells: int  # Materialized cells

    def contains(self, value: float, rel: float = 1e-12) -> bool:
        slack = rel * max(abs(value), self.cell * self.cell)
        return self.inner - slack <= value <= self.outer + slack

    @property
    def width(self) -> float:
        return self.outer - self.inner

    @classmethod
    def exact(cls, value: float) -> "AreaBracket":
        return cls(inner=value, center=value, outer=value, cell=0.0, cells=0)

    def scaled(self, factor: float) -> "AreaBracket":
        return AreaBracket(
            inner=self.inner * factor,
            center=self.center * factor,
            outer=self.outer * factor,
            cell=self.cell,
            cells=self.cells,
        )

    def __add__(self, other: "AreaBracket") -> "AreaBracket":
        return AreaBracket(
            inner=self.inner + other.inner,
            center=self.center + other.center,
            outer=self.outer + other.outer,
            cell=max(self.cell, other.cell),
            cells=self.cells + other.cells,
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "inner": self.inner,
            "center": self.center,
            "outer": self.outer,
            "cell": self.cell,
        }

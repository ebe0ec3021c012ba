"""The verification suite: every lemma check over one sweep, plus oracle cross-checks."""

from dataclasses import dataclass, field
from typing import Any, Iterable, Optional, Sequence

from rich.progress import Progress, SpinnerColumn, TextColumn

from ..config import get_settings
from ..counting import (
    count_pairs_bruteforce,
    count_pairs_fast,
    count_sweep,
    level_families,
)
from ..counting.sweep import OmegaSet, ThetaGrid, omegas_at
from ..errors import OracleMismatchError
from ..models import BoundReport, DigitSystem, PairCountRecord, Point
from ..utils.logging import console, get_logger
from .lemmas import (
    verify_claim_mtheta,
    verify_count_bounds,
    verify_lemma_int,
    verify_lemma_lip,
    verify_lemma_simple2,
    verify_lemma_simple3,
)
from .regimes import at_least, classify_angle

logger = get_logger(__name__)

GRID_ANGLES_PER_LEVEL = 16


@dataclass
class SuiteResult:
    """All reports of one suite run."""

    reports: list[BoundReport] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        """True iff no exact-constant report failed."""
        return all(r.passed is not False for r in self.reports if r.exact_constant)

    @property
    def failures(self) -> list[str]:
        return [r.lemma for r in self.reports if r.exact_constant and r.passed is False]

    def report(self, lemma: str) -> Optional[BoundReport]:
        return next((r for r in self.reports if r.lemma == lemma), None)

    def to_dict(self) -> dict[str, Any]:
        return {
            "passed": self.passed,
            "failures": self.failures,
            "reports": [r.to_dict() for r in self.reports],
        }


def _merge_into(reports: dict[str, BoundReport], new: Iterable[BoundReport]) -> None:
    for report in new:
        if report.lemma in reports:
            reports[report.lemma].merge(report)
        else:
            reports[report.lemma] = report


def _spread(values: Sequence[float], count: int) -> list[float]:
    """Up to ``count`` evenly spaced picks, endpoints included."""
    if len(values) <= count:
        return list(values)
    step = (len(values) - 1) / (count - 1)
    return [values[round(k * step)] for k in range(count)]


def grid_angles(sys: DigitSystem, n: int) -> tuple[list[float], list[float]]:
    """
    Angles k*delta at level n for the partition and parent-pair checks.

    Small angles satisfy delta <= k delta < beta; large ones lie in
    [delta^(1-s), 1].
    """
    delta = 1.0 / sys.a**n
    s = sys.s
    small, large = [], []
    k = 1
    while k * delta <= 1.0:
        theta = k * delta
        if classify_angle(delta, s, theta).is_small:
            small.append(theta)
        elif at_least(theta, delta ** (1 - s)):
            large.append(theta)
        k += 1
    return _spread(small, GRID_ANGLES_PER_LEVEL), _spread(large, GRID_ANGLES_PER_LEVEL)


def oracle_check(
    sys: DigitSystem,
    records: Iterable[PairCountRecord],
    max_words: Optional[int] = None,
    strict: bool = False,
) -> BoundReport:
    """
    Fast counter against brute force wherever b^n <= max_words; measured = |difference|.

    With ``strict`` the first disagreement raises OracleMismatchError.
    """
    max_words = get_settings().verify.oracle_max_words if max_words is None else max_words
    report = BoundReport(lemma="oracle", exact_constant=True, bound=0)
    for record in records:
        if sys.b**record.n > max_words:
            report.skipped += 1
            continue
        R, R_theta = level_families(sys, record.n, record.theta, record.omega)
        fast = count_pairs_fast(R, R_theta, keep_pairs=False).L
        brute = count_pairs_bruteforce(R, R_theta, keep_pairs=False).L
        report.observe(abs(fast - brute), 0, record.n)
        if fast != brute or record.L != brute:
            context = f"at n={record.n} theta={record.theta!r} omega={record.omega!r}"
            if strict:
                raise OracleMismatchError(record.L if fast == brute else fast, brute, context)
            report.fail(f"{context}: fast {fast}, swept {record.L}, brute {brute}")
    return report


def run_suite(
    sys: DigitSystem,
    n_range: Iterable[int],
    theta_grid: ThetaGrid,
    omega_set: OmegaSet,
    oracle: bool = True,
    simple3_samples: Optional[int] = None,
    seed: int = 0,
    pair_cap: Optional[int] = None,
    jobs: int = 1,
    show_progress: bool = False,
) -> SuiteResult:
    """
    Run every check on one system.

    The sweep grid feeds the count bounds and the corner/area checks; extra
    k*delta angles per level feed the partition and parent-pair checks.
    """
    settings = get_settings()
    levels = sorted(set(n_range))
    samples = settings.verify.simple3_samples if simple3_samples is None else simple3_samples

    records = count_sweep(
        sys, levels, theta_grid, omega_set, keep_pairs=True, pair_cap=pair_cap, jobs=jobs
    )
    reports: dict[str, BoundReport] = {}
    _merge_into(reports, verify_count_bounds(sys, levels, theta_grid, omega_set, records=records))
    if oracle:
        _merge_into(reports, [oracle_check(sys, records)])

    simple2 = BoundReport(lemma="simple2", exact_constant=True, bound=10)
    for record in records:
        if record.pairs_truncated:
            simple2.skipped += 1
            simple2.note("pair lists truncated; raise pair_list_cap to check every pair")
            continue
        simple2.merge(verify_lemma_simple2(record, record.theta, record.delta, sys.s, record.n))
    _merge_into(reports, [simple2, verify_lemma_simple3(samples, seed)])

    tasks: list[tuple[str, int, float, Point]] = []
    for n in levels:
        small, large = grid_angles(sys, n)
        for theta in small:
            tasks += [("mtheta", n, theta, w) for w in omegas_at(omega_set, theta)]
        for theta in large:
            tasks += [("lip", n, theta, w) for w in omegas_at(omega_set, theta)]
    for record in records:
        tasks.append(("int", record.n, record.theta, record.omega))

    def run_task(kind: str, n: int, theta: float, omega: Point) -> list[BoundReport]:
        if kind == "mtheta":
            return verify_claim_mtheta(sys, n, theta, omega)
        if kind == "lip":
            return verify_lemma_lip(sys, n, theta, omega)
        return verify_lemma_int(sys, n, theta, omega)

    if show_progress:
        with Progress(
            SpinnerColumn(),
            TextColumn("[progress.description]{task.description}"),
            console=console,
            transient=True,
        ) as progress:
            task = progress.add_task(f"Checking {len(tasks)} lemma instances...", total=len(tasks))
            for kind, n, theta, omega in tasks:
                _merge_into(reports, run_task(kind, n, theta, omega))
                progress.advance(task)
    else:
        for kind, n, theta, omega in tasks:
            _merge_into(reports, run_task(kind, n, theta, omega))

    for report in reports.values():
        report.settle_fitted(settings.verify.stability_factor)

    result = SuiteResult(reports=list(reports.values()))
    logger.info(
        f"Suite on {sys.label}: {len(result.reports)} reports, "
        f"{'pass' if result.passed else 'FAIL ' + ', '.join(result.failures)}"
    )
    return result

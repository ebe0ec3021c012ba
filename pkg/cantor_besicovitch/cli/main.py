"""cantor-besicovitch CLI - finite-scale verification runs."""

import math
import time
from pathlib import Path
from typing import Any, Optional

import typer
from rich.table import Table

from ..errors import CantorBesicovitchError, ConfigError, WallClockError
from ..utils.logging import console

app = typer.Typer(
    name="cantor-besicovitch",
    help="Counting, verification and scaling runs for Besicovitch sets of Cantor graphs.",
    no_args_is_help=True,
)


class Deadline:
    """Wall-clock budget checked between stages."""

    def __init__(self, budget: Optional[float]):
        self.budget = budget
        self.start = time.monotonic()

    def check(self) -> None:
        elapsed = time.monotonic() - self.start
        if self.budget is not None and elapsed > self.budget:
            raise WallClockError(elapsed, self.budget)


def _load(config: Optional[Path], **flags: Any):
    """Effective RunConfig: file, then flags, validated and applied to settings."""
    from ..config import RunConfig, configure, get_settings

    try:
        cfg = RunConfig.load(config) if config else RunConfig()
        cfg = cfg.with_overrides(**flags).validate()
    except FileNotFoundError:
        console.print(f"[red]Error: Config not found: {config}[/red]")
        raise typer.Exit(2)
    except ConfigError as e:
        console.print("[red]Invalid configuration:[/red]")
        for problem in e.problems:
            console.print(f"  [red]- {problem}[/red]")
        raise typer.Exit(2)

    configure(cfg.apply(get_settings()))
    return cfg


def _fail(error: CantorBesicovitchError) -> None:
    console.print(f"[red]Error: {error}[/red]")
    raise typer.Exit(1)


def _out_dir(cfg) -> Path:
    path = Path(cfg.output.directory)
    path.mkdir(parents=True, exist_ok=True)
    return path


ConfigOption = typer.Option(None, "--config", help="JSON run configuration")
AOption = typer.Option(None, "--a", help="Base a >= 3")
BOption = typer.Option(None, "--b", help="Branch count 2 <= b < a")
ModeOption = typer.Option(None, "--mode", help="self_similar | seeded_random")
SeedOption = typer.Option(None, "--seed", help="Seed for every random choice")
NOption = typer.Option(None, "--n", help="Single level n")
NRangeOption = typer.Option(None, "--n-range", help="Levels N..M")
ThetaOption = typer.Option(None, "--theta-grid", help="grid:K | list:v1,... | A | A:max=X")
OmegaOption = typer.Option(None, "--omega", help="zero | random:R[:N] | mixed:R:N")
JobsOption = typer.Option(None, "--jobs", help="Worker processes")
OutOption = typer.Option(None, "--out", help="Output directory")
PairCapOption = typer.Option(None, "--pair-cap", help="Max pair tests per count")
RasterCapOption = typer.Option(None, "--raster-cap", help="Max raster cells")


@app.callback()
def main(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging"),
    log_file: Optional[Path] = typer.Option(None, "--log-file", help="Also log to this file"),
):
    """Finite-scale verification engine for Besicovitch sets of Cantor graphs."""
    from ..config import get_settings
    from ..utils.logging import setup_logging

    settings = get_settings()
    setup_logging("DEBUG" if verbose else settings.log_level, log_file or settings.log_file)


@app.command()
def gen(
    config: Optional[Path] = ConfigOption,
    a: Optional[int] = AOption,
    b: Optional[int] = BOption,
    mode: Optional[str] = ModeOption,
    seed: Optional[int] = SeedOption,
    n: Optional[int] = NOption,
    n_range: Optional[str] = NRangeOption,
    out: Optional[Path] = OutOption,
):
    """
    Write the digit system, Cantor intervals, graph anchors and rectangles.

    One row per object and level; anchors and rectangles start at level 1.
    """
    from ..cantor import cantor_intervals, graph_anchors, rect_approx
    from ..reports import format_value, write_csv

    cfg = _load(config, a=a, b=b, mode=mode, seed=seed, n=n, n_range=n_range, out=out)
    system = cfg.digit_system()
    out_dir = _out_dir(cfg)
    echo = cfg.to_dict()

    intervals, anchors, rects = [], [], []
    try:
        for level in cfg.n_range:
            for interval in cantor_intervals(system, level):
                intervals.append(
                    {"n": level, "start": interval.start, "a_pow": system.a**level,
                     "lo": format_value(interval.lo), "hi": format_value(interval.hi)}
                )
            if level < 1:
                continue
            for anchor in graph_anchors(system, level):
                anchors.append(
                    {"n": level, "i": anchor.index, "px": anchor.px, "py": anchor.py,
                     "x": format_value(anchor.x), "y": format_value(anchor.y)}
                )
            rects += [r.to_row() for r in rect_approx(system, level)]
    except CantorBesicovitchError as e:
        _fail(e)

    system.save(out_dir / "system.json")
    write_csv(out_dir / "intervals.csv", intervals, ["n", "start", "a_pow", "lo", "hi"], echo)
    write_csv(out_dir / "anchors.csv", anchors, ["n", "i", "px", "py", "x", "y"], echo)
    write_csv(out_dir / "rects.csv", rects, ["n", "i", "px", "py", "a_pow", "b_pow"], echo)

    console.print(f"[green]✓[/green] {system.label}: levels {cfg.sweep.n_min}..{cfg.sweep.n_max}")
    console.print(f"  Intervals: {len(intervals)}  Anchors: {len(anchors)}  Rectangles: {len(rects)}")
    console.print(f"  Output: {out_dir}")


COUNT_COLUMNS = [
    "a", "b", "mode", "seed", "n", "delta", "k", "theta", "omega_x", "omega_y", "regime", "L",
    "max_per_i", "method", "elapsed_ms",
]


@app.command()
def count(
    config: Optional[Path] = ConfigOption,
    a: Optional[int] = AOption,
    b: Optional[int] = BOption,
    mode: Optional[str] = ModeOption,
    seed: Optional[int] = SeedOption,
    n: Optional[int] = NOption,
    n_range: Optional[str] = NRangeOption,
    theta_grid: Optional[str] = ThetaOption,
    omega: Optional[str] = OmegaOption,
    oracle: bool = typer.Option(False, "--oracle", help="Cross-check against brute force"),
    jobs: Optional[int] = JobsOption,
    out: Optional[Path] = OutOption,
    pair_cap: Optional[int] = PairCapOption,
    timings: bool = typer.Option(False, "--timings", help="Write elapsed_ms"),
):
    """Count intersecting pairs L(delta, theta) over the sweep grid."""
    from ..counting import count_sweep
    from ..reports import angle_k, write_csv
    from ..verification import classify_angle, oracle_check

    cfg = _load(
        config, a=a, b=b, mode=mode, seed=seed, n=n, n_range=n_range, theta_grid=theta_grid,
        omega=omega, jobs=jobs, out=out, pair_cap=pair_cap, timings=timings or None,
    )
    system = cfg.digit_system()
    out_dir = _out_dir(cfg)

    try:
        records = count_sweep(
            system, cfg.n_range, cfg.theta_rule(), cfg.omega_policy(),
            keep_pairs=False, pair_cap=cfg.budget.pair_cap, jobs=cfg.budget.jobs,
        )
        check = oracle_check(system, records, strict=True) if oracle else None
    except CantorBesicovitchError as e:
        _fail(e)

    rows = []
    for record in records:
        row = record.to_row(cfg.output.timings)
        row["k"] = angle_k(record.theta, record.delta)
        row.update(a=system.a, b=system.b, mode=cfg.system.mode, seed=cfg.system.seed)
        row["regime"] = classify_angle(record.delta, system.s, record.theta).tag.value
        rows.append(row)
    write_csv(out_dir / "counts.csv", rows, COUNT_COLUMNS, cfg.to_dict())

    console.print(f"[green]✓[/green] {len(rows)} counts for {system.label} -> {out_dir / 'counts.csv'}")
    if check is not None:
        console.print(f"  Oracle: {check.instances} cross-checked, {check.skipped} above the word cap")


@app.command()
def verify(
    config: Optional[Path] = ConfigOption,
    a: Optional[int] = AOption,
    b: Optional[int] = BOption,
    mode: Optional[str] = ModeOption,
    seed: Optional[int] = SeedOption,
    n: Optional[int] = NOption,
    n_range: Optional[str] = NRangeOption,
    theta_grid: Optional[str] = ThetaOption,
    omega: Optional[str] = OmegaOption,
    oracle: bool = typer.Option(True, "--oracle/--no-oracle", help="Cross-check against brute force"),
    jobs: Optional[int] = JobsOption,
    out: Optional[Path] = OutOption,
    pair_cap: Optional[int] = PairCapOption,
):
    """
    Run every lemma check and write report.json.

    Exits 0 only when every exact-constant check passes.
    """
    from ..reports import write_json
    from ..verification import run_suite

    cfg = _load(
        config, a=a, b=b, mode=mode, seed=seed, n=n, n_range=n_range, theta_grid=theta_grid,
        omega=omega, jobs=jobs, out=out, pair_cap=pair_cap,
    )
    system = cfg.digit_system()
    out_dir = _out_dir(cfg)
    deadline = Deadline(cfg.budget.wall_clock_s)

    console.print(f"\n[bold]Verifying {system.label}, n = {cfg.sweep.n_min}..{cfg.sweep.n_max}[/bold]\n")
    try:
        result = run_suite(
            system, cfg.n_range, cfg.theta_rule(), cfg.omega_policy(),
            oracle=oracle, simple3_samples=cfg.sweep.simple3_samples, seed=cfg.system.seed,
            pair_cap=cfg.budget.pair_cap, jobs=cfg.budget.jobs, show_progress=True,
        )
        deadline.check()
    except CantorBesicovitchError as e:
        _fail(e)

    write_json(out_dir / "report.json", result.to_dict(), cfg.to_dict())

    table = Table(title="Lemma checks")
    table.add_column("Lemma", style="cyan")
    table.add_column("Kind")
    table.add_column("Instances", justify="right")
    table.add_column("Measured max", justify="right")
    table.add_column("Constant", justify="right")
    table.add_column("Result")
    for report in result.reports:
        verdict = {True: "[green]pass[/green]", False: "[red]FAIL[/red]"}.get(report.passed, "-")
        table.add_row(
            report.lemma,
            "exact" if report.exact_constant else "fitted",
            str(report.instances),
            f"{report.measured_max:.6g}",
            f"{report.constant:.6g}",
            verdict,
        )
    console.print(table)
    for report in result.reports:
        for note in report.notes:
            console.print(f"  [dim]{report.lemma}: {note}[/dim]")

    if not result.passed:
        console.print(f"\n[red]Failed: {', '.join(result.failures)}[/red]")
        raise typer.Exit(1)
    console.print(f"\n[green]✓ All exact-constant checks pass[/green] -> {out_dir / 'report.json'}")


AREA_COLUMNS = [
    "n", "delta", "k", "phi", "pair_sum_upper", "union_inner", "union_center", "union_outer",
    "area_bound", "resolution",
]


def _area_row(n: int, delta: float, entry) -> dict[str, Any]:
    from ..config import get_settings

    return {
        "n": n,
        "delta": delta,
        "k": entry.k,
        "phi": entry.phi,
        "pair_sum_upper": entry.pairwise_sum,
        "union_inner": entry.bracket.inner,
        "union_center": entry.bracket.center,
        "union_outer": entry.bracket.outer,
        "area_bound": entry.area_bound,
        "resolution": delta / get_settings().numerics.pair_cell_divisor,
    }


def _fit_entry(points: list[tuple[int, float, float]], predicted: float, kind: str) -> dict[str, Any]:
    """Fit (n, log(1/delta), y) points; ``kind`` names the sign convention."""
    from ..verification import fit_exponent
    from ..config import get_settings

    fit = fit_exponent([(x, y) for _, x, y in points])
    return {
        "fit": fit.to_dict(),
        "predicted": predicted,
        "kind": kind,
        "agrees": abs(fit.slope - predicted) <= get_settings().verify.slope_tolerance,
        "values": [[n, x, y] for n, x, y in points],
    }


@app.command()
def scan(
    config: Optional[Path] = ConfigOption,
    a: Optional[int] = AOption,
    b: Optional[int] = BOption,
    mode: Optional[str] = ModeOption,
    seed: Optional[int] = SeedOption,
    n: Optional[int] = NOption,
    n_range: Optional[str] = NRangeOption,
    omega: Optional[str] = OmegaOption,
    jobs: Optional[int] = JobsOption,
    out: Optional[Path] = OutOption,
    pair_cap: Optional[int] = PairCapOption,
    raster_cap: Optional[int] = RasterCapOption,
    alpha: float = typer.Option(0.75, "--alpha", help="Exponent of the theta = delta^alpha schedule"),
):
    """
    Fit scaling exponents across levels and write slopes.json, areas.csv, chain.json.

    Growth fits use log value; decay fits use -log(value / log(1/delta)).
    """
    from ..counting import count_level
    from ..ensemble import double_sum, easy_bound_check, minkowski_chain, pair_overlap_profile
    from ..models import EnsembleConfig
    from ..reports import write_csv, write_json
    from ..verification import (
        S0,
        easy_floor,
        log_inverse,
        predicted_count_exponent,
        predicted_double_exponent,
        predicted_fixed_exponent,
        theorem_floor,
        verify_area_sums,
        verify_chain,
    )

    cfg = _load(
        config, a=a, b=b, mode=mode, seed=seed, n=n, n_range=n_range, omega=omega, jobs=jobs,
        out=out, pair_cap=pair_cap, raster_cap=raster_cap,
    )
    system = cfg.digit_system()
    s = system.s
    out_dir = _out_dir(cfg)
    deadline = Deadline(cfg.budget.wall_clock_s)
    policy = cfg.omega_policy()
    levels = [lv for lv in cfg.n_range if lv >= 1]
    chain_levels = [lv for lv in levels if lv <= cfg.sweep.chain_n_max]

    fits: dict[str, Any] = {}
    area_rows: list[dict[str, Any]] = []
    chains = []
    doubles = []
    try:
        for theta in cfg.sweep.fixed_thetas:
            points = []
            for level in levels:
                record = count_level(system, level, theta, policy.omega_for(theta), keep_pairs=False,
                                     pair_cap=cfg.budget.pair_cap)
                points.append((level, log_inverse(record.delta), math.log(max(record.L, 1))))
                deadline.check()
            fits[f"count_theta={theta!r}"] = _fit_entry(points, predicted_count_exponent(s), "growth")

        points = []
        for level in levels:
            delta = 1.0 / system.a**level
            theta = delta**alpha
            record = count_level(system, level, theta, policy.omega_for(theta), keep_pairs=False,
                                 pair_cap=cfg.budget.pair_cap)
            points.append((level, log_inverse(delta), math.log(max(record.L, 1))))
            deadline.check()
        fits[f"count_schedule_alpha={alpha!r}"] = _fit_entry(
            points, predicted_count_exponent(s, alpha), "growth"
        )

        fixed_pts, double_pts, easy_pts = [], [], []
        for level in chain_levels:
            ensemble = EnsembleConfig(system, level, policy)
            x = log_inverse(ensemble.delta)
            profile = pair_overlap_profile(ensemble, jobs=cfg.budget.jobs) if policy.is_zero else None
            double = double_sum(ensemble, jobs=cfg.budget.jobs, profile=profile)
            doubles.append(double)
            for entry in profile or []:
                area_rows.append(_area_row(level, ensemble.delta, entry))
            easy = easy_bound_check(ensemble, pair_cap=cfg.budget.pair_cap, jobs=cfg.budget.jobs)[0]
            chains.append(minkowski_chain(ensemble, jobs=cfg.budget.jobs, double=double))
            fixed_pts.append((level, x, -math.log(double.fixed_sum.center / x)))
            double_pts.append((level, x, -math.log(double.total.center / x)))
            easy_pts.append((level, x, -math.log(easy.measured_max / x)))
            deadline.check()

        if len(chain_levels) >= 3:
            fits["fixed_sum"] = _fit_entry(fixed_pts, predicted_fixed_exponent(s), "decay")
            fits["double_sum"] = _fit_entry(double_pts, predicted_double_exponent(s), "decay")
            fits["easy_sum"] = _fit_entry(easy_pts, 1 - s, "decay")
    except ValueError as e:
        console.print(f"[red]Error: {e}[/red]")
        raise typer.Exit(1)
    except CantorBesicovitchError as e:
        _fail(e)

    checks = verify_area_sums(doubles) + verify_chain(chains) if chain_levels else []
    failures = [c.lemma for c in checks if c.passed is False]

    echo = cfg.to_dict()
    predictions = {
        "s": s,
        "S0": S0,
        "fixed_exponent": predicted_fixed_exponent(s),
        "double_exponent": predicted_double_exponent(s),
        "easy_floor": easy_floor(s),
        "theorem_floor": theorem_floor(s),
    }
    write_json(
        out_dir / "slopes.json",
        {
            "fits": fits,
            "predictions": predictions,
            "checks": [c.to_dict() for c in checks],
            "passed": not failures,
        },
        echo,
    )
    if chain_levels:
        write_csv(
            out_dir / "areas.csv",
            area_rows,
            AREA_COLUMNS,
            echo,
        )
        write_json(
            out_dir / "chain.json",
            {"levels": [c.to_dict() for c in chains], **predictions},
            echo,
        )

    table = Table(title=f"Exponent fits ({system.label})")
    table.add_column("Quantity", style="cyan")
    table.add_column("Slope", justify="right")
    table.add_column("Predicted", justify="right")
    table.add_column("Residual", justify="right")
    for name, entry in fits.items():
        table.add_row(
            name,
            f"{entry['fit']['slope']:.4f}",
            f"{entry['predicted']:.4f}",
            f"{entry['fit']['residual']:.3g}",
        )
    console.print(table)
    console.print(f"  Floors: easy {easy_floor(s):.4f}, theorem {theorem_floor(s):.4f}")
    for check in checks:
        verdict = {True: "[green]pass[/green]", False: "[red]FAIL[/red]"}.get(check.passed, "-")
        console.print(
            f"  {check.lemma}: {verdict} (constant {check.constant:.4g}, "
            f"stability {check.stability:.3g}, skipped {check.skipped})"
        )
    if failures:
        console.print(f"\n[red]Failed: {', '.join(failures)}[/red] -> {out_dir / 'slopes.json'}")
        raise typer.Exit(1)
    console.print(f"[green]✓[/green] Output: {out_dir}")


@app.command()
def report(
    directory: Optional[Path] = typer.Argument(None, help="Run directory (default: output.directory)"),
    config: Optional[Path] = ConfigOption,
    out: Optional[Path] = OutOption,
):
    """Render the artifacts of a run directory as a markdown summary."""
    from ..reports import render_summary

    if directory is None:
        directory = Path(_load(config, out=out).output.directory)
    if not directory.is_dir():
        console.print(f"[red]Error: Directory not found: {directory}[/red]")
        raise typer.Exit(1)
    typer.echo(render_summary(directory))


@app.command()
def version():
    """Show version information."""
    from .. import __version__

    console.print(f"cantor-besicovitch version {__version__}")


if __name__ == "__main__":
    app()

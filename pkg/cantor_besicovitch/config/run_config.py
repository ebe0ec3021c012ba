"""The JSON run document: system, sweep, output and budget blocks."""

import copy
import json
import math
import re
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Callable, Optional

from ..errors import ConfigError
from ..models import DigitSystem, OmegaPolicy, SystemMode
from .settings import Settings

FORMATS = ("csv", "json")


@dataclass
class SystemBlock:
    a: int = 3
    b: int = 2
    mode: str = SystemMode.SELF_SIMILAR.value
    seed: int = 0
    J: Optional[list[int]] = None  # Defaults to the staircase digits
    sigma: Optional[list[int]] = None
    overrides: list[dict[str, list[int]]] = field(default_factory=list)


@dataclass
class SweepBlock:
    n_min: int = 1
    n_max: int = 5
    theta_grid: str = "grid:64"
    omega: str = "zero"
    omega_table: list[list[float]] = field(default_factory=list)  # [theta, wx, wy] rows for "table"
    fixed_thetas: list[float] = field(default_factory=lambda: [0.2, 0.5, 0.8])
    chain_n_max: int = 4
    simple3_samples: int = 100_000


@dataclass
class OutputBlock:
    directory: str = "runs/latest"
    formats: list[str] = field(default_factory=lambda: list(FORMATS))
    timings: bool = False


@dataclass
class BudgetBlock:
    pair_cap: Optional[int] = None
    raster_cap: Optional[int] = None
    wall_clock_s: Optional[float] = None
    jobs: int = 1


def parse_theta_grid(spec: str, a: int) -> Callable[[int], list[float]]:
    """
    Per-level angle rule from a grid spec.

    ``grid:K``   K equally spaced angles on [0, pi], endpoints included
    ``list:...`` explicit comma-separated angles (may be empty)
    ``A``        the angle set {k delta} at each level
    ``A:max=X``  the angle set truncated at X
    """
    text = spec.strip()
    if text.startswith("grid:"):
        count = int(text[5:])
        if count < 0:
            raise ValueError(f"grid size must be >= 0, got {count}")
        if count == 1:
            values = [0.0]
        else:
            values = [math.pi * k / (count - 1) for k in range(count)]
        return lambda n: list(values)
    if text.startswith("list:"):
        items = [v for v in text[5:].split(",") if v.strip()]
        values = [float(v) for v in items]
        bad = [v for v in values if not 0.0 <= v <= math.pi]
        if bad:
            raise ValueError(f"angles must lie in [0, pi], got {bad}")
        return lambda n: list(values)
    match = re.fullmatch(r"A(?::max=([0-9.eE+-]+))?", text)
    if match:
        from ..ensemble import angle_set

        top = float(match.group(1)) if match.group(1) else None
        return lambda n: list(angle_set(1.0 / a**n, top).angles)
    raise ValueError(f"Invalid theta grid {spec!r}: use grid:K | list:v1,... | A | A:max=X")


def parse_n_range(text: str) -> tuple[int, int]:
    """``7`` or ``3..7`` (also ``3-7``) as an inclusive (n_min, n_max)."""
    match = re.fullmatch(r"\s*(\d+)\s*(?:(?:\.\.|-)\s*(\d+))?\s*", text)
    if not match:
        raise ValueError(f"Invalid n range {text!r}: use N or N..M")
    lo = int(match.group(1))
    hi = int(match.group(2)) if match.group(2) else lo
    return lo, hi


@dataclass
class RunConfig:
    """A complete, validated run description."""

    system: SystemBlock = field(default_factory=SystemBlock)
    sweep: SweepBlock = field(default_factory=SweepBlock)
    output: OutputBlock = field(default_factory=OutputBlock)
    budget: BudgetBlock = field(default_factory=BudgetBlock)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "RunConfig":
        blocks = {"system": SystemBlock, "sweep": SweepBlock, "output": OutputBlock, "budget": BudgetBlock}
        problems = [f"{key}: unknown block" for key in data if key not in blocks]
        kwargs: dict[str, Any] = {}
        for name, block in blocks.items():
            raw = data.get(name, {}) or {}
            known = block.__dataclass_fields__
            problems += [f"{name}.{key}: unknown field" for key in raw if key not in known]
            kwargs[name] = block(**{k: copy.deepcopy(v) for k, v in raw.items() if k in known})
        if problems:
            raise ConfigError(problems)
        return cls(**kwargs)

    @classmethod
    def load(cls, path: Path) -> "RunConfig":
        try:
            with open(path, encoding="utf-8") as f:
                data = json.load(f)
        except json.JSONDecodeError as e:
            raise ConfigError([f"{path}: invalid JSON ({e.msg} at line {e.lineno})"])
        if not isinstance(data, dict):
            raise ConfigError([f"{path}: top level must be an object"])
        return cls.from_dict(data)

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    def with_overrides(self, **flags: Any) -> "RunConfig":
        """Copy with command-line flags applied; None values are ignored."""
        cfg = RunConfig.from_dict(self.to_dict())
        targets = {
            "a": ("system", "a"),
            "b": ("system", "b"),
            "mode": ("system", "mode"),
            "seed": ("system", "seed"),
            "theta_grid": ("sweep", "theta_grid"),
            "omega": ("sweep", "omega"),
            "out": ("output", "directory"),
            "timings": ("output", "timings"),
            "pair_cap": ("budget", "pair_cap"),
            "raster_cap": ("budget", "raster_cap"),
            "jobs": ("budget", "jobs"),
        }
        for key, value in flags.items():
            if value is None:
                continue
            if key == "n":
                cfg.sweep.n_min = cfg.sweep.n_max = int(value)
            elif key == "n_range":
                try:
                    cfg.sweep.n_min, cfg.sweep.n_max = parse_n_range(str(value))
                except ValueError as e:
                    raise ConfigError([f"sweep.n_range: {e}"])
            elif key in targets:
                block, name = targets[key]
                setattr(getattr(cfg, block), name, str(value) if key == "out" else value)
            else:
                raise ConfigError([f"{key}: unknown override"])
        # A new base or branch count invalidates explicit digit sets
        if flags.get("a") is not None or flags.get("b") is not None:
            if cfg.system.J is not None and len(cfg.system.J) != cfg.system.b:
                cfg.system.J = None
                cfg.system.sigma = None
        return cfg

    def validate(self) -> "RunConfig":
        """Raise ConfigError listing every invalid field."""
        problems: list[str] = []
        s, w, o, g = self.system, self.sweep, self.output, self.budget

        if s.a < 3:
            problems.append("system.a: must be >= 3")
        if not 2 <= s.b < s.a:
            problems.append("system.b: must satisfy 2 <= b < a")
        if s.mode not in {m.value for m in SystemMode}:
            problems.append(f"system.mode: must be one of {[m.value for m in SystemMode]}")
        if not problems:
            try:
                self.digit_system()
            except (ValueError, KeyError, TypeError) as e:
                problems.append(f"system: {e}")

        if w.n_min < 0:
            problems.append("sweep.n_min: must be >= 0")
        if w.n_max < w.n_min:
            problems.append("sweep.n_max: must be >= n_min")
        try:
            parse_theta_grid(w.theta_grid, max(s.a, 3))
        except ValueError as e:
            problems.append(f"sweep.theta_grid: {e}")
        try:
            OmegaPolicy.parse(w.omega, s.seed, w.omega_table)
        except (ValueError, TypeError) as e:
            problems.append(f"sweep.omega: {e}")
        if any(not 0 < t <= math.pi for t in w.fixed_thetas):
            problems.append("sweep.fixed_thetas: angles must lie in (0, pi]")
        if w.chain_n_max < 0:
            problems.append("sweep.chain_n_max: must be >= 0")
        if w.simple3_samples < 0:
            problems.append("sweep.simple3_samples: must be >= 0")

        unknown = [f for f in o.formats if f not in FORMATS]
        if unknown:
            problems.append(f"output.formats: unknown formats {unknown}")

        if g.jobs < 1:
            problems.append("budget.jobs: must be >= 1")
        for name in ("pair_cap", "raster_cap"):
            value = getattr(g, name)
            if value is not None and value <= 0:
                problems.append(f"budget.{name}: must be positive")
        if g.wall_clock_s is not None and g.wall_clock_s <= 0:
            problems.append("budget.wall_clock_s: must be positive")

        if problems:
            raise ConfigError(problems)
        return self

    def digit_system(self) -> DigitSystem:
        s = self.system
        if s.mode == SystemMode.SEEDED_RANDOM.value:
            system = DigitSystem.seeded(s.a, s.b, s.seed)
        elif s.J is None:
            system = DigitSystem.staircase(s.a, s.b)
        else:
            system = DigitSystem.self_similar(s.a, s.b, tuple(s.J), s.sigma)
        for entry in s.overrides:
            system = system.with_override(
                tuple(entry["word"]), entry.get("J"), entry.get("sigma")
            )
        return system

    @property
    def n_range(self) -> range:
        return range(self.sweep.n_min, self.sweep.n_max + 1)

    def theta_rule(self) -> Callable[[int], list[float]]:
        return parse_theta_grid(self.sweep.theta_grid, self.system.a)

    def omega_policy(self) -> OmegaPolicy:
        return OmegaPolicy.parse(self.sweep.omega, self.system.seed, self.sweep.omega_table)

    def apply(self, settings: Settings) -> Settings:
        """Budget caps copied into process settings."""
        if self.budget.pair_cap is not None:
            settings.numerics.pair_cap = self.budget.pair_cap
        if self.budget.raster_cap is not None:
            settings.numerics.raster_cap = self.budget.raster_cap
        if self.sweep.simple3_samples is not None:
            settings.verify.simple3_samples = self.sweep.simple3_samples
        return settings

"""Tests for run documents, overrides and validation."""

import json
import math
from pathlib import Path

import pytest

from cantor_besicovitch.config import (
    RunConfig,
    Settings,
    parse_n_range,
    parse_theta_grid,
)
from cantor_besicovitch.errors import ConfigError
from cantor_besicovitch.models import DigitSystem, OmegaKind, SystemMode


class TestThetaGrid:
    def test_grid(self):
        assert parse_theta_grid("grid:3", 3)(1) == pytest.approx([0.0, math.pi / 2, math.pi])
        assert parse_theta_grid("grid:1", 3)(4) == [0.0]
        assert parse_theta_grid("grid:0", 3)(4) == []

    def test_list(self):
        assert parse_theta_grid("list:0.1, 0.5", 3)(2) == [0.1, 0.5]
        assert parse_theta_grid("list:", 3)(2) == []
        with pytest.raises(ValueError, match="pi"):
            parse_theta_grid("list:4", 3)

    def test_angle_set_per_level(self):
        rule = parse_theta_grid("A", 3)
        assert len(rule(1)) == 10
        assert len(rule(2)) == 29
        assert len(parse_theta_grid("A:max=1", 3)(1)) == 4

    @pytest.mark.parametrize("spec", ["grid", "grid:-1", "steps:4", "A:max="])
    def test_invalid(self, spec):
        with pytest.raises(ValueError):
            parse_theta_grid(spec, 3)


class TestNRange:
    @pytest.mark.parametrize(
        "text,expected", [("3..7", (3, 7)), ("3-7", (3, 7)), ("5", (5, 5)), (" 2 .. 4 ", (2, 4))]
    )
    def test_forms(self, text, expected):
        assert parse_n_range(text) == expected

    def test_invalid(self):
        with pytest.raises(ValueError):
            parse_n_range("three")


class TestRunConfig:
    def test_defaults_are_valid(self):
        cfg = RunConfig().validate()
        assert cfg.digit_system() == DigitSystem.staircase(3, 2)
        assert list(cfg.n_range) == [1, 2, 3, 4, 5]
        assert cfg.omega_policy().kind == OmegaKind.ZERO
        assert cfg.sweep.fixed_thetas == [0.2, 0.5, 0.8]

    def test_load(self, tmp_path: Path):
        path = tmp_path / "run.json"
        path.write_text(json.dumps({"system": {"a": 5, "b": 2, "J": [1, 3]}, "sweep": {"n_max": 3}}))
        cfg = RunConfig.load(path).validate()
        assert cfg.digit_system().J == (1, 3)
        assert cfg.sweep.n_max == 3 and cfg.sweep.theta_grid == "grid:64"

    def test_load_invalid_json(self, tmp_path: Path):
        path = tmp_path / "run.json"
        path.write_text("{not json")
        with pytest.raises(ConfigError, match="invalid JSON"):
            RunConfig.load(path)

    def test_unknown_fields(self):
        with pytest.raises(ConfigError) as excinfo:
            RunConfig.from_dict({"sweep": {"bogus": 1}, "extra": {}})
        assert "sweep.bogus: unknown field" in excinfo.value.problems
        assert "extra: unknown block" in excinfo.value.problems

    def test_validate_lists_every_problem(self):
        cfg = RunConfig.from_dict(
            {
                "system": {"a": 3, "b": 3},
                "sweep": {"n_min": 4, "n_max": 2, "omega": "spiral"},
                "budget": {"jobs": 0},
            }
        )
        with pytest.raises(ConfigError) as excinfo:
            cfg.validate()
        problems = excinfo.value.problems
        assert "system.b: must satisfy 2 <= b < a" in problems
        assert "sweep.n_max: must be >= n_min" in problems
        assert "budget.jobs: must be >= 1" in problems
        assert any(p.startswith("sweep.omega:") for p in problems)

    def test_omega_table(self):
        cfg = RunConfig.from_dict(
            {"sweep": {"omega": "table", "omega_table": [[0.5, 0.0, 0.25], [0.2, 0.1, 0.0]]}}
        ).validate()
        policy = cfg.omega_policy()
        assert policy.kind == OmegaKind.TABLE and policy.to_spec() == "table"
        assert policy.omega_for(0.5) == (0.0, 0.25)
        assert policy.omega_for(0.8) == (0.0, 0.0)

    def test_omega_table_required(self):
        cfg = RunConfig.from_dict({"sweep": {"omega": "table"}})
        with pytest.raises(ConfigError, match="sweep.omega: omega table is empty"):
            cfg.validate()

    def test_invalid_digit_set(self):
        cfg = RunConfig.from_dict({"system": {"a": 5, "b": 2, "J": [1, 7]}})
        with pytest.raises(ConfigError, match="system:"):
            cfg.validate()

    def test_seeded_mode(self):
        cfg = RunConfig.from_dict({"system": {"a": 5, "b": 3, "mode": "seeded_random", "seed": 7}})
        assert cfg.validate().digit_system() == DigitSystem.seeded(5, 3, 7)
        assert cfg.digit_system().mode == SystemMode.SEEDED_RANDOM

    def test_word_overrides(self):
        cfg = RunConfig.from_dict({"system": {"overrides": [{"word": [], "sigma": [1, 0]}]}})
        expected = DigitSystem.staircase(3, 2).with_override((), sigma=(1, 0))
        assert cfg.digit_system() == expected


class TestOverrides:
    def test_flags(self, tmp_path: Path):
        base = RunConfig()
        cfg = base.with_overrides(a=5, n_range="2..4", jobs=3, out=tmp_path, mode=None)
        assert (cfg.system.a, cfg.sweep.n_min, cfg.sweep.n_max, cfg.budget.jobs) == (5, 2, 4, 3)
        assert cfg.output.directory == str(tmp_path)
        assert base.system.a == 3
        json.dumps(cfg.to_dict())

    def test_single_level(self):
        cfg = RunConfig().with_overrides(n=6)
        assert list(cfg.n_range) == [6]

    def test_new_branch_count_drops_digit_set(self):
        cfg = RunConfig.from_dict({"system": {"a": 5, "b": 2, "J": [0, 4]}})
        changed = cfg.with_overrides(b=3)
        assert changed.system.J is None
        assert changed.validate().digit_system().J == (0, 2, 4)

    def test_bad_range(self):
        with pytest.raises(ConfigError, match="sweep.n_range"):
            RunConfig().with_overrides(n_range="x")

    def test_unknown_flag(self):
        with pytest.raises(ConfigError, match="unknown override"):
            RunConfig().with_overrides(colour="red")

    def test_apply(self):
        cfg = RunConfig.from_dict(
            {"budget": {"pair_cap": 99, "raster_cap": 1000}, "sweep": {"simple3_samples": 12}}
        )
        settings = cfg.apply(Settings())
        assert settings.numerics.pair_cap == 99
        assert settings.numerics.raster_cap == 1000
        assert settings.verify.simple3_samples == 12

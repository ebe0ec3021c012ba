"""End-to-end tests of the command-line interface."""

import json
from pathlib import Path

import pytest

from cantor_besicovitch import __version__
from cantor_besicovitch.cli.main import app
from cantor_besicovitch.config import get_settings
from cantor_besicovitch.reports import read_csv, read_json


class TestGen:
    def test_writes_every_object(self, runner, tmp_path: Path):
        out = tmp_path / "gen"
        result = runner.invoke(app, ["gen", "--n-range", "0..2", "--out", str(out)])
        assert result.exit_code == 0, result.output

        _, intervals = read_csv(out / "intervals.csv")
        assert len(intervals) == 1 + 2 + 4
        assert [r["start"] for r in intervals if r["n"] == "2"] == ["0", "2", "6", "8"]
        assert intervals[0]["hi"] == "1"

        _, anchors = read_csv(out / "anchors.csv")
        assert {r["n"] for r in anchors} == {"1", "2"}
        assert anchors[1] == {"n": "1", "i": "2", "px": "2", "py": "1", "x": "2/3", "y": "1/2"}

        config, rects = read_csv(out / "rects.csv")
        assert rects[0] == {"n": "1", "i": "1", "px": "-1", "py": "-1", "a_pow": "3", "b_pow": "2"}
        assert config["sweep"]["n_min"] == 0
        assert json.loads((out / "system.json").read_text())["a"] == 3

    def test_invalid_flags_exit_2(self, runner, tmp_path: Path):
        result = runner.invoke(app, ["gen", "--a", "3", "--b", "3", "--out", str(tmp_path)])
        assert result.exit_code == 2
        assert "system.b" in result.output

    def test_missing_config_exits_2(self, runner, tmp_path: Path):
        result = runner.invoke(app, ["gen", "--config", str(tmp_path / "nope.json")])
        assert result.exit_code == 2
        assert "Config not found" in result.output


class TestCount:
    def test_counts_csv(self, runner, write_config, tmp_path: Path):
        config = write_config()
        result = runner.invoke(app, ["count", "--config", str(config), "--oracle"])
        assert result.exit_code == 0, result.output

        echo, rows = read_csv(tmp_path / "out" / "counts.csv")
        assert echo["system"]["a"] == 3
        assert len(rows) == 2 * 8
        first = rows[0]
        assert (first["n"], first["theta"], first["L"], first["k"]) == ("1", "0.0", "4", "0")
        assert first["regime"] == "below_scale"
        assert first["elapsed_ms"] == ""
        assert {r["method"] for r in rows} == {"fast"}

    def test_timings_and_flags(self, runner, tmp_path: Path):
        out = tmp_path / "timed"
        result = runner.invoke(
            app,
            ["count", "--n", "2", "--theta-grid", "list:0.5", "--timings", "--out", str(out)],
        )
        assert result.exit_code == 0, result.output
        _, rows = read_csv(out / "counts.csv")
        assert len(rows) == 1 and rows[0]["k"] == ""
        assert float(rows[0]["elapsed_ms"]) >= 0

    def test_pair_cap_exit_1(self, runner, tmp_path: Path):
        result = runner.invoke(
            app,
            ["count", "--n", "3", "--theta-grid", "list:0.3", "--pair-cap", "1", "--out", str(tmp_path)],
        )
        assert result.exit_code == 1
        assert "Error" in result.output


class TestVerify:
    def test_passes_and_writes_report(self, runner, write_config, tmp_path: Path):
        config = write_config()
        result = runner.invoke(app, ["verify", "--config", str(config)])
        assert result.exit_code == 0, result.output

        report = read_json(tmp_path / "out" / "report.json")
        assert report["passed"] is True and report["failures"] == []
        lemmas = {r["lemma"]: r for r in report["reports"]}
        for name in ("simple1", "trivial_cap", "simple2", "simple3", "int", "oracle", "lip1", "lip2"):
            assert lemmas[name]["pass"] is True, name
        assert lemmas["simple3"]["instances"] == 200

    def test_ladder_note_above_one(self, runner, write_config, tmp_path: Path):
        config = write_config(sweep={"theta_grid": "list:1.5", "n_max": 1})
        runner.invoke(app, ["verify", "--config", str(config), "--no-oracle"])
        report = read_json(tmp_path / "out" / "report.json")
        ladder = next(r for r in report["reports"] if r["lemma"] == "ladder")
        assert "ladder checks skipped for |theta| > 1" in ladder["notes"]
        assert not any(r["lemma"] == "oracle" for r in report["reports"])

    def test_wall_clock_budget(self, runner, write_config):
        config = write_config(budget={"wall_clock_s": 1e-9})
        result = runner.invoke(app, ["verify", "--config", str(config)])
        assert result.exit_code == 1
        assert "wall-clock" in result.output


class TestScan:
    def test_single_level_cannot_fit(self, runner, write_config):
        config = write_config()
        result = runner.invoke(app, ["scan", "--config", str(config), "--n", "2"])
        assert result.exit_code == 1
        assert ">= 3 points" in result.output

    def test_count_fits_without_chain(self, runner, write_config, tmp_path: Path):
        config = write_config(sweep={"n_max": 4})
        result = runner.invoke(app, ["scan", "--config", str(config), "--alpha", "0.5"])
        assert result.exit_code == 0, result.output

        slopes = read_json(tmp_path / "out" / "slopes.json")
        assert set(slopes["fits"]) == {
            "count_theta=0.2",
            "count_theta=0.5",
            "count_theta=0.8",
            "count_schedule_alpha=0.5",
        }
        entry = slopes["fits"]["count_theta=0.5"]
        assert entry["kind"] == "growth" and entry["fit"]["points"] == 4
        assert isinstance(entry["agrees"], bool)
        assert entry["predicted"] == pytest.approx(slopes["predictions"]["s"] ** 2)
        assert not (tmp_path / "out" / "chain.json").exists()

    @pytest.mark.slow
    def test_full_scan(self, runner, write_config, tmp_path: Path):
        config = write_config(sweep={"n_max": 3, "chain_n_max": 3})
        result = runner.invoke(app, ["scan", "--config", str(config)])
        assert result.exit_code == 0, result.output

        out = tmp_path / "out"
        slopes = read_json(out / "slopes.json")
        assert {"fixed_sum", "double_sum", "easy_sum"} <= set(slopes["fits"])
        chain = read_json(out / "chain.json")
        assert [level["n"] for level in chain["levels"]] == [1, 2, 3]
        assert all(level["holds"] for level in chain["levels"])
        _, areas = read_csv(out / "areas.csv")
        assert {r["n"] for r in areas} == {"1", "2", "3"}

        assert slopes["passed"] is True
        checks = {c["lemma"]: c for c in slopes["checks"]}
        assert set(checks) == {"area_sum", "area_bracket", "chain", "chain_floor"}
        assert checks["chain"]["instances"] == 3
        assert checks["chain_floor"]["skipped"] == 2

    def test_failed_scaling_check_exit_1(self, runner, write_config, tmp_path: Path):
        verify = get_settings().verify
        verify.chain_floor = 1e9
        verify.scaling_min_level = 1
        config = write_config(sweep={"n_max": 3, "chain_n_max": 1})
        result = runner.invoke(app, ["scan", "--config", str(config)])
        assert result.exit_code == 1
        assert "chain_floor" in result.output

        slopes = read_json(tmp_path / "out" / "slopes.json")
        assert slopes["passed"] is False
        floor = next(c for c in slopes["checks"] if c["lemma"] == "chain_floor")
        assert floor["pass"] is False and floor["instances"] == 1
        assert (tmp_path / "out" / "chain.json").exists()


class TestReport:
    def test_summary_of_run(self, runner, write_config, tmp_path: Path):
        config = write_config()
        runner.invoke(app, ["count", "--config", str(config)])
        result = runner.invoke(app, ["report", str(tmp_path / "out")])
        assert result.exit_code == 0, result.output
        assert "## Counts" in result.output
        assert "| report.json | absent |" in result.output

    def test_default_directory_from_config(self, runner, write_config, tmp_path: Path):
        (tmp_path / "out").mkdir()
        result = runner.invoke(app, ["report", "--config", str(write_config())])
        assert result.exit_code == 0
        assert "no artifacts" in result.output

    def test_missing_directory(self, runner, tmp_path: Path):
        result = runner.invoke(app, ["report", str(tmp_path / "missing")])
        assert result.exit_code == 1


def test_version(runner):
    result = runner.invoke(app, ["version"])
    assert result.exit_code == 0
    assert __version__ in result.output

"""A corrupted fast counter must be caught by the brute-force oracle."""

import dataclasses
from pathlib import Path

from cantor_besicovitch.cli.main import app
from cantor_besicovitch.reports import read_json
from cantor_besicovitch.verification import suite


def _inflate(monkeypatch) -> None:
    real = suite.count_pairs_fast

    def inflated(R, R_theta, **kwargs):
        record = real(R, R_theta, **kwargs)
        return dataclasses.replace(record, L=record.L + 1)

    monkeypatch.setattr(suite, "count_pairs_fast", inflated)


def test_verify_fails_on_counter_fault(runner, write_config, tmp_path: Path, monkeypatch):
    _inflate(monkeypatch)
    config = write_config(sweep={"n_max": 1, "theta_grid": "grid:3"})
    result = runner.invoke(app, ["verify", "--config", str(config)])
    assert result.exit_code == 1

    report = read_json(tmp_path / "out" / "report.json")
    assert report["passed"] is False
    assert "oracle" in report["failures"]
    oracle = next(r for r in report["reports"] if r["lemma"] == "oracle")
    assert oracle["measured_max"] == 1
    assert oracle["notes"]


def test_count_oracle_flags_fault(runner, write_config, tmp_path: Path, monkeypatch):
    _inflate(monkeypatch)
    config = write_config(sweep={"n_max": 1, "theta_grid": "grid:3"})
    result = runner.invoke(app, ["count", "--config", str(config), "--oracle"])
    assert result.exit_code == 1
    assert "brute-force" in result.output
    assert not (tmp_path / "out" / "counts.csv").exists()


def test_fault_goes_unseen_without_oracle(runner, write_config, monkeypatch):
    _inflate(monkeypatch)
    config = write_config(sweep={"n_max": 1, "theta_grid": "grid:3"})
    result = runner.invoke(app, ["verify", "--config", str(config), "--no-oracle"])
    assert result.exit_code == 0, result.output

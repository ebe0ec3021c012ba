"""Fixtures for end-to-end CLI runs."""

import json
from pathlib import Path
from typing import Any, Callable

import pytest
from typer.testing import CliRunner


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


@pytest.fixture
def write_config(tmp_path: Path) -> Callable[..., Path]:
    """Write a small run document; keyword blocks are merged over the defaults."""

    def write(name: str = "run.json", **blocks: dict[str, Any]) -> Path:
        document: dict[str, Any] = {
            "system": {"a": 3, "b": 2},
            "sweep": {
                "n_min": 1,
                "n_max": 2,
                "theta_grid": "grid:8",
                "simple3_samples": 200,
                "chain_n_max": 0,
            },
            "output": {"directory": str(tmp_path / "out")},
        }
        for block, values in blocks.items():
            document.setdefault(block, {}).update(values)
        path = tmp_path / name
        path.write_text(json.dumps(document))
        return path

    return write

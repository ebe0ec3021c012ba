"""CSV and JSON artifacts with the effective configuration echoed in a header.

Writes are atomic (temp file, then ``os.replace``) and floats use ``repr`` so
equal configurations produce byte-identical files.
"""

import csv
import io
import json
import math
import os
import tempfile
from fractions import Fraction
from pathlib import Path
from typing import Any, Iterable, Mapping, Optional, Sequence

CONFIG_PREFIX = "# config: "


def format_value(value: Any) -> str:
    """Shortest round-trip text for one CSV cell."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}" if value.denominator != 1 else str(value.numerator)
    return str(value)


def angle_k(theta: float, delta: float) -> Optional[int]:
    """k when theta is (numerically) the grid angle k delta."""
    k = round(theta / delta)
    return k if math.isclose(k * delta, theta, rel_tol=1e-12, abs_tol=1e-15) else None


def config_line(config: Mapping[str, Any]) -> str:
    return CONFIG_PREFIX + json.dumps(config, sort_keys=True, separators=(",", ":"))


def format_csv(
    rows: Iterable[Mapping[str, Any]],
    columns: Sequence[str],
    config: Mapping[str, Any],
) -> str:
    buffer = io.StringIO()
    buffer.write(config_line(config) + "\n")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([format_value(row.get(c)) for c in columns])
    return buffer.getvalue()


def write_atomic(path: Path, text: str) -> Path:
    """Write text through a temp file in the same directory."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(prefix=f".{path.name}.", dir=path.parent)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as f:
            f.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return path


def write_csv(
    path: Path,
    rows: Iterable[Mapping[str, Any]],
    columns: Sequence[str],
    config: Mapping[str, Any],
) -> Path:
    return write_atomic(path, format_csv(rows, columns, config))


def write_json(path: Path, data: Mapping[str, Any], config: Mapping[str, Any]) -> Path:
    document = {"config": dict(config), **data}
    return write_atomic(path, json.dumps(document, indent=2, sort_keys=True) + "\n")


def read_csv(path: Path) -> tuple[dict[str, Any], list[dict[str, str]]]:
    """(config, rows) of a CSV artifact."""
    with open(path, encoding="utf-8", newline="") as f:
        first = f.readline()
        config: dict[str, Any] = {}
        if first.startswith(CONFIG_PREFIX):
            config = json.loads(first[len(CONFIG_PREFIX):])
        else:
            f.seek(0)
        return config, list(csv.DictReader(f))


def read_json(path: Path) -> dict[str, Any]:
    with open(path, encoding="utf-8") as f:
        return json.load(f)

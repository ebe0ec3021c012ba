"""Run artifacts and their summaries.

- CSV/JSON writers with the effective configuration in a header
- Markdown summary of a run directory with artifact digests
"""

from .artifacts import (
    angle_k,
    format_csv,
    format_value,
    read_csv,
    read_json,
    write_atomic,
    write_csv,
    write_json,
)
from .summary import ARTIFACTS, LEMMAS, render_summary

__all__ = [
    # Artifacts
    "angle_k",
    "format_csv",
    "format_value",
    "read_csv",
    "read_json",
    "write_atomic",
    "write_csv",
    "write_json",
    # Summaries
    "ARTIFACTS",
    "LEMMAS",
    "render_summary",
]

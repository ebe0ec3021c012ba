"""Utility modules for cantor-besicovitch.

Provides common utilities:
- Logging configuration
- File hashing and seeded hash streams
"""

from .hash import SeededStream, hash_file
from .logging import (
    CellLogger,
    cell_logger,
    console,
    get_logger,
    setup_logging,
)


__all__ = [
    # Logging
    "setup_logging",
    "get_logger",
    "console",
    "CellLogger",
    "cell_logger",
    # Hashing
    "hash_file",
    "SeededStream",
]

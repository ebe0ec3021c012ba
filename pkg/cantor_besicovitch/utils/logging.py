"""Logging for cantor-besicovitch.

Records go through one package logger. Console output shares the Rich
console used by the CLI tables. Log records never reach the run artifacts.
"""

import logging
from pathlib import Path
from typing import Any, MutableMapping, Optional

from rich.console import Console
from rich.logging import RichHandler


# Shared by the CLI and the console handler
console = Console()

ROOT_LOGGER = "cantor_besicovitch"
FILE_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def setup_logging(level: str = "INFO", log_file: Optional[Path] = None) -> logging.Logger:
    """
    Configure the package logger.

    Args:
        level: Console log level name; unknown names fall back to INFO
        log_file: Optional file that receives every record at DEBUG

    Returns:
        The package logger
    """
    console_level = getattr(logging, level.upper(), logging.INFO)

    logger = logging.getLogger(ROOT_LOGGER)
    logger.handlers.clear()

    handler = RichHandler(console=console, show_time=False, show_path=False)
    handler.setFormatter(logging.Formatter("%(message)s"))
    handler.setLevel(console_level)
    logger.addHandler(handler)

    if log_file:
        log_file = Path(log_file)
        log_file.parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(log_file)
        file_handler.setFormatter(logging.Formatter(FILE_FORMAT))
        file_handler.setLevel(logging.DEBUG)
        logger.addHandler(file_handler)
        logger.setLevel(logging.DEBUG)
    else:
        logger.setLevel(console_level)

    return logger


def get_logger(name: str) -> logging.Logger:
    """Module logger, e.g. ``get_logger(__name__)``."""
    return logging.getLogger(name)


class CellLogger(logging.LoggerAdapter):
    """Prefixes every message with the sweep cell it belongs to."""

    def process(self, msg: Any, kwargs: MutableMapping[str, Any]) -> tuple[Any, MutableMapping[str, Any]]:
        tag = " ".join(f"{key}={value!r}" for key, value in (self.extra or {}).items())
        return f"[{tag}] {msg}", kwargs


def cell_logger(logger: logging.Logger, **cell: Any) -> CellLogger:
    """Adapter for one (n, theta, ...) cell: ``cell_logger(logger, n=3, theta=0.2)``."""
    return CellLogger(logger, cell)

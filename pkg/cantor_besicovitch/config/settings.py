"""Configuration settings for cantor-besicovitch."""

import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv

load_dotenv()


@dataclass
class NumericsConfig:
    """Tolerances and desk-scale resource caps."""

    eps_geom: float = 1e-12  # Relative to the larger rectangle diagonal
    enumeration_cap: int = 2**20  # Max b^n words per level
    pair_cap: int = 2**30  # Max pair tests per counting call
    raster_cap: int = 2**26  # Max materialized raster cells
    pair_list_cap: int = 200_000  # Max pair records kept by a counter
    pair_cell_divisor: int = 32  # Pair-intersection raster cell = delta / divisor
    gamma_cell_divisor: int = 8  # Gamma(delta) / E(delta) raster cell = delta / divisor
    raster_tile: int = 256  # Tile edge, in cells
    lemma_slack: float = 1e-9  # Relative slack for exact-constant area checks


@dataclass
class VerifyConfig:
    """Defaults for the verification suite."""

    simple3_samples: int = 100_000
    oracle_max_words: int = 1024  # Brute-force cross-check only when b^n <= this
    stability_factor: float = 5.0  # Fitted constants must vary by less than this
    slope_tolerance: float = 0.2
    bracket_width: float = 0.1  # Max (outer - inner) / center of an area sum
    chain_floor: float = 0.5  # Min certified sum of Gamma neighbourhoods
    scaling_min_level: int = 3  # Coarser levels are skipped by the scaling checks


@dataclass
class Settings:
    """Main settings container."""

    numerics: NumericsConfig = field(default_factory=NumericsConfig)
    verify: VerifyConfig = field(default_factory=VerifyConfig)

    # Logging
    log_level: str = "INFO"
    log_file: Optional[Path] = None

    @classmethod
    def from_env(cls) -> "Settings":
        """Create settings from environment variables."""
        settings = cls()

        if cap := os.getenv("CANTOR_ENUMERATION_CAP"):
            settings.numerics.enumeration_cap = int(cap)

        if cap := os.getenv("CANTOR_PAIR_CAP"):
            settings.numerics.pair_cap = int(cap)

        if cap := os.getenv("CANTOR_RASTER_CAP"):
            settings.numerics.raster_cap = int(cap)

        if log_level := os.getenv("CANTOR_LOG_LEVEL"):
            settings.log_level = log_level

        if log_file := os.getenv("CANTOR_LOG_FILE"):
            settings.log_file = Path(log_file)

        return settings


# Global settings instance
_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """Get the global settings instance."""
    global _settings
    if _settings is None:
        _settings = Settings.from_env()
    return _settings


def configure(settings: Settings) -> None:
    """Set the global settings instance."""
    global _settings
    _settings = settings

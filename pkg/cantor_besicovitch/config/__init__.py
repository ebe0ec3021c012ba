"""Configuration for cantor-besicovitch."""

from .settings import (
    NumericsConfig,
    Settings,
    VerifyConfig,
    configure,
    get_settings,
)
from .run_config import (
    BudgetBlock,
    OutputBlock,
    RunConfig,
    SweepBlock,
    SystemBlock,
    parse_n_range,
    parse_theta_grid,
)

__all__ = [
    "NumericsConfig",
    "Settings",
    "VerifyConfig",
    "configure",
    "get_settings",
    # Run documents
    "BudgetBlock",
    "OutputBlock",
    "RunConfig",
    "SweepBlock",
    "SystemBlock",
    "parse_n_range",
    "parse_theta_grid",
]

"""Shared fixtures."""

import pytest

from cantor_besicovitch.config import Settings, configure
from cantor_besicovitch.models import DigitSystem, EnsembleConfig


@pytest.fixture(autouse=True)
def fresh_settings():
    """Every test starts from default settings; CLI runs install their own."""
    configure(Settings())
    yield
    configure(Settings())


@pytest.fixture
def staircase() -> DigitSystem:
    """a=3, b=2, J={0, 2}, order-preserving sigma."""
    return DigitSystem.staircase(3, 2)


@pytest.fixture
def half_dim() -> DigitSystem:
    """a=4, b=2 so s = 1/2."""
    return DigitSystem.staircase(4, 2)


@pytest.fixture
def ensemble_n1(staircase) -> EnsembleConfig:
    return EnsembleConfig(staircase, 1)

"""cantor-besicovitch - finite-scale verification of Besicovitch sets of Cantor graphs."""

__version__ = "0.1.0"

from .models import DigitSystem, EnsembleConfig, OmegaPolicy

__all__ = ["DigitSystem", "EnsembleConfig", "OmegaPolicy", "__version__"]

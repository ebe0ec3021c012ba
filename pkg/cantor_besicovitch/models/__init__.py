"""Data models for cantor-besicovitch."""

from .digits import (
    DigitSystem,
    SystemMode,
    Word,
    encode_word,
)
from .lattice import (
    AnchorPoint,
    Decomposition,
    GridRect,
    LatticeInterval,
)
from .oriented import (
    IntersectResult,
    OrientedRect,
    Point,
    Verdict,
)
from .records import (
    AreaBracket,
    BoundReport,
    ExponentFit,
    PairCountRecord,
    PairRecord,
    Regime,
    RegimeTag,
    ScaleLadder,
)
from .ensemble import (
    AngleSet,
    ChainReport,
    DoubleSumReport,
    EnsembleConfig,
    GammaMeasure,
    OmegaKind,
    OmegaPolicy,
    OverlapEntry,
)

__all__ = [
    # Digit systems
    "DigitSystem",
    "SystemMode",
    "Word",
    "encode_word",
    # Lattice geometry
    "AnchorPoint",
    "Decomposition",
    "GridRect",
    "LatticeInterval",
    # Rotated geometry
    "IntersectResult",
    "OrientedRect",
    "Point",
    "Verdict",
    # Records
    "AreaBracket",
    "BoundReport",
    "ExponentFit",
    "PairCountRecord",
    "PairRecord",
    "Regime",
    "RegimeTag",
    "ScaleLadder",
    # Ensembles
    "AngleSet",
    "ChainReport",
    "DoubleSumReport",
    "EnsembleConfig",
    "GammaMeasure",
    "OmegaKind",
    "OmegaPolicy",
    "OverlapEntry",
]

"""Regimes, bound formulas, lemma checks and exponent fits."""

from .bounds import (
    S0,
    area_bound,
    area_bound_large,
    area_bound_small,
    bound_large,
    bound_small,
    cl1_bound,
    easy_floor,
    predicted_count_exponent,
    predicted_double_exponent,
    predicted_fixed_exponent,
    theorem_floor,
)
from .fitting import fit_exponent, log_points
from .lemmas import (
    verify_claim_mtheta,
    verify_count_bounds,
    verify_lemma_int,
    verify_lemma_lip,
    verify_lemma_simple1,
    verify_lemma_simple2,
    verify_lemma_simple3,
    verify_trivial_cap,
)
from .regimes import (
    TIE_SLACK,
    at_least,
    classify_angle,
    ladder_r0,
    log_inverse,
    scale_ladder,
    thresholds,
)
from .scaling import bracket_spread, verify_area_sums, verify_chain
from .suite import SuiteResult, grid_angles, oracle_check, run_suite

__all__ = [
    # Regimes
    "TIE_SLACK",
    "at_least",
    "classify_angle",
    "ladder_r0",
    "log_inverse",
    "scale_ladder",
    "thresholds",
    # Bounds
    "S0",
    "area_bound",
    "area_bound_large",
    "area_bound_small",
    "bound_large",
    "bound_small",
    "cl1_bound",
    "easy_floor",
    "predicted_count_exponent",
    "predicted_double_exponent",
    "predicted_fixed_exponent",
    "theorem_floor",
    # Lemma checks
    "verify_claim_mtheta",
    "verify_count_bounds",
    "verify_lemma_int",
    "verify_lemma_lip",
    "verify_lemma_simple1",
    "verify_lemma_simple2",
    "verify_lemma_simple3",
    "verify_trivial_cap",
    # Cross-level scaling checks
    "bracket_spread",
    "verify_area_sums",
    "verify_chain",
    # Fits
    "fit_exponent",
    "log_points",
    # Suite
    "SuiteResult",
    "grid_angles",
    "oracle_check",
    "run_suite",
]

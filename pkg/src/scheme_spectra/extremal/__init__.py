"""Extremal eigenvalues: column analysis, the statement registry, bound lemmas and thresholds."""

from .bounds import (
    BOUND_LEMMAS,
    BoundCheck,
    BoundReport,
    check_bound_lemma,
    chvatal_concentration_check,
    default_bound_grid,
    sweep_bound_lemma,
)
from .classical import classical_in_box, rational_p_matrix, theta_decreasing_condition
from .columns import ColumnAnalysis, Prediction, analyze_column, imin_conjecture, predict_extremal
from .theorems import REGISTRY, Statement, VerificationReport, catalog, tuple_fields, verify_theorem
from .thresholds import OnsetReport, krawtchouk_column, largebeta_conclusions, largebeta_onset, q0_threshold

__all__ = [
    "BOUND_LEMMAS",
    "BoundCheck",
    "BoundReport",
    "ColumnAnalysis",
    "OnsetReport",
    "Prediction",
    "REGISTRY",
    "Statement",
    "VerificationReport",
    "analyze_column",
    "catalog",
    "check_bound_lemma",
    "chvatal_concentration_check",
    "classical_in_box",
    "default_bound_grid",
    "imin_conjecture",
    "krawtchouk_column",
    "largebeta_conclusions",
    "largebeta_onset",
    "predict_extremal",
    "q0_threshold",
    "rational_p_matrix",
    "sweep_bound_lemma",
    "theta_decreasing_condition",
    "tuple_fields",
    "verify_theorem",
]

"""lcm of consecutive values of quadratic polynomials."""

from ._lcmquad import (
    BfBreakdown,
    Error,
    LcmResult,
    PolyProfile,
    QuadPoly,
    TSums,
    ap_constant,
    B_f,
    beta_map,
    classify,
    error_term,
    kronecker,
    lcm_exact,
    log_lcm,
    log_lcm_ladder,
    log_lcm_reducible,
    pairing_check,
    reducible_constant,
    root_samples,
    solution_count,
    star_discrepancy,
    t_sums,
)

__all__ = [
    "BfBreakdown",
    "Error",
    "LcmResult",
    "PolyProfile",
    "QuadPoly",
    "TSums",
    "ap_constant",
    "B_f",
    "beta_map",
    "classify",
    "error_term",
    "kronecker",
    "lcm_exact",
    "log_lcm",
    "log_lcm_ladder",
    "log_lcm_reducible",
    "pairing_check",
    "reducible_constant",
    "root_samples",
    "solution_count",
    "star_discrepancy",
    "t_sums",
]

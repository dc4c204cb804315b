"""Exact verification of divisibility properties of truncated hypergeometric series."""

from .exactnum import (
    INFINITY,
    DenominatorNotCoprime,
    NotInvertible,
    Rational,
    Residue,
    mod_inv,
    p_valuation,
    reduce_mod,
)
from .hyperg import HyperSeriesSpec, binomial, catalan, harmonic, rising, terminating_hyper, trunc_hyper
from .polyring import PolyQ, phi_poly, pochhammer_shift_poly, psi_poly
from .sweep import Report, SweepConfig, run_sweep
from .theorems import EXACT_ZERO, REGISTRY, CheckParams, Status, Verdict, run_check

__version__ = "0.1.0"

__all__ = [
    "INFINITY", "DenominatorNotCoprime", "NotInvertible", "Rational", "Residue", "mod_inv",
    "p_valuation", "reduce_mod", "HyperSeriesSpec", "binomial", "catalan", "harmonic", "rising",
    "terminating_hyper", "trunc_hyper", "PolyQ", "phi_poly", "pochhammer_shift_poly", "psi_poly",
    "Report", "SweepConfig", "run_sweep", "EXACT_ZERO", "REGISTRY", "CheckParams", "Status",
    "Verdict", "run_check",
]

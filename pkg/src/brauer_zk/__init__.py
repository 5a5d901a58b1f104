"""Brauer-Manin obstructions for x**2 + y**2 + z**k = m with odd k."""

from .arith import (
    factorize,
    integer_nth_root,
    is_sum_of_two_squares,
    largest_power_divisor,
    vp_rp,
)
from .combi import CombiResult, combi
from .cyclotomic import IntPolynomial, build_fd, cyclotomic_poly, fd_family
from .decide import DecisionReport, ispossible, table_generate
from .hilbert import REAL, Place, hilbert_neg_one, invariant_of_symbol
from .invariants import (
    InvariantSet,
    check_abthm,
    check_jagy_obstruction,
    check_strong_approx_failure,
    invariant_set,
    small_root_search,
)
from .oracle import residue_scan_C, witness_search

__version__ = "0.1.0"

__all__ = [
    "CombiResult",
    "DecisionReport",
    "IntPolynomial",
    "InvariantSet",
    "Place",
    "REAL",
    "build_fd",
    "check_abthm",
    "check_jagy_obstruction",
    "check_strong_approx_failure",
    "combi",
    "cyclotomic_poly",
    "factorize",
    "fd_family",
    "hilbert_neg_one",
    "integer_nth_root",
    "invariant_of_symbol",
    "invariant_set",
    "is_sum_of_two_squares",
    "ispossible",
    "largest_power_divisor",
    "residue_scan_C",
    "small_root_search",
    "table_generate",
    "vp_rp",
    "witness_search",
]

"""Exact computation of spin Kerov polynomials and related objects."""

__version__ = "0.1.0"

from .exact import LaurentTail, OddPowerSumPoly, fmt_rational
from .kerov import (
    KerovPolynomial,
    coincidence_report,
    express_in_basis,
    ordinary_kerov,
    positivity_report,
    spin_kerov,
    symmetrized_spin_kerov,
)
from .spin import spin_character_poly, spin_free_cumulant_poly, symmetrized_cumulant_poly

__all__ = [
    "LaurentTail",
    "OddPowerSumPoly",
    "fmt_rational",
    "KerovPolynomial",
    "coincidence_report",
    "express_in_basis",
    "ordinary_kerov",
    "positivity_report",
    "spin_kerov",
    "symmetrized_spin_kerov",
    "spin_character_poly",
    "spin_free_cumulant_poly",
    "symmetrized_cumulant_poly",
]

"""Exact principal-minor computations over arbitrary commutative rings,
and universal polynomials for the diagonal entries of matrix powers."""

from .matrix import Matrix, MinorTable, Subset, all_subsets, diag_reindex, quasiprincipal_minor
from .poly import POLY_RING, Polynomial, PolynomialRing, pvar, qvar, xvar
from .rings import (
    FootnoteAlgebra,
    IntegerRing,
    ModularRing,
    PrimeField,
    RationalField,
    Ring,
)
from .series import SeriesRing, TruncatedSeries
from .universal import (
    OffDiagCertificate,
    UniversalPolynomial,
    eval_certificate,
    eval_universal,
    generic_matrix,
    synth_diag,
    synth_offdiag,
    verify_symbolic,
)

__all__ = [
    "FootnoteAlgebra",
    "IntegerRing",
    "Matrix",
    "MinorTable",
    "ModularRing",
    "OffDiagCertificate",
    "POLY_RING",
    "Polynomial",
    "PolynomialRing",
    "PrimeField",
    "RationalField",
    "Ring",
    "SeriesRing",
    "Subset",
    "TruncatedSeries",
    "UniversalPolynomial",
    "all_subsets",
    "diag_reindex",
    "eval_certificate",
    "eval_universal",
    "generic_matrix",
    "pvar",
    "quasiprincipal_minor",
    "qvar",
    "synth_diag",
    "synth_offdiag",
    "verify_symbolic",
    "xvar",
]

"""Symbolic verification engine for n-Jordan homomorphism identities."""

from .freealg import Mode, Polynomial, Word
from .blift import BPolynomial, BWord, HSymbol, lift
from .jordan import (
    Certificate,
    JordanConfig,
    RefutationReport,
    emit_certificate,
    mobius_psi,
    phi,
    plain_defect,
    psi_extract,
    psi_recursive,
    refute_cheshmavar,
    symmetrized_defect,
    verify_collapse,
    verify_decomposition,
    verify_theorem,
)
from .report import Report

__version__ = "0.1.0"

__all__ = [
    "Mode", "Polynomial", "Word", "BPolynomial", "BWord", "HSymbol", "lift",
    "Certificate", "JordanConfig", "RefutationReport", "emit_certificate",
    "mobius_psi", "phi", "plain_defect", "psi_extract", "psi_recursive",
    "refute_cheshmavar", "symmetrized_defect", "verify_collapse",
    "verify_decomposition", "verify_theorem", "Report", "__version__",
]

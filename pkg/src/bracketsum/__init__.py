"""Exact filtered binomial sums, Lucas-sequence quotients and a congruence verifier."""

from .lucas import LucasPair, LucasParams, lucas_pair, lucas_pair_mod, lucas_quotient
from .numtheory import DomainError
from .poly import IntPolynomial, cyclotomic_poly
from .sums import BracketQuery, a_poly, bracket_direct, bracket_via_w, w_closed_form
from .verify import VerificationReport, verify, verify_all

__version__ = "0.1.0"

__all__ = [
    "BracketQuery",
    "DomainError",
    "IntPolynomial",
    "LucasPair",
    "LucasParams",
    "VerificationReport",
    "a_poly",
    "bracket_direct",
    "bracket_via_w",
    "cyclotomic_poly",
    "lucas_pair",
    "lucas_pair_mod",
    "lucas_quotient",
    "verify",
    "verify_all",
    "w_closed_form",
]

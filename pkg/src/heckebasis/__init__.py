"""Exact computation of Schur elements, a-invariants and canonical basic
sets for Iwahori-Hecke algebras with integer weights, plus the partition
combinatorics and root-of-unity arithmetic that feed them.
"""

__version__ = "0.1.0"

from .laurent import (
    CyclotomicInt,
    LaurentPoly,
    NonIntegerCoefficients,
    PrimeDividesQ,
    ZeroPolynomial,
    cyclotomic_polynomial,
    specialize_cyclotomic,
    specialize_mod_prime,
)

__all__ = [
    "CyclotomicInt",
    "LaurentPoly",
    "NonIntegerCoefficients",
    "PrimeDividesQ",
    "ZeroPolynomial",
    "cyclotomic_polynomial",
    "specialize_cyclotomic",
    "specialize_mod_prime",
    "__version__",
]

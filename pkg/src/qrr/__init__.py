"""Exact verification workbench for partial Rogers-Ramanujan identities.

Polynomials and truncated series carry Python integers throughout, so every
check is an exact coefficient comparison.
"""

from .laurent import LaurentPoly
from .rational import RationalFunction
from .report import InvalidInstance, Mismatch, VerificationReport, corrupting
from .schur import Flavor, partial_theta
from .series import TruncatedSeries

__version__ = "0.1.0"

__all__ = [
    "LaurentPoly",
    "TruncatedSeries",
    "RationalFunction",
    "VerificationReport",
    "Mismatch",
    "InvalidInstance",
    "corrupting",
    "Flavor",
    "partial_theta",
]

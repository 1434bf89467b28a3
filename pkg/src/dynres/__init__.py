"""Exact multiplier polynomials and resultant invariants.

Everything is integer arithmetic end to end: dynatomic polynomials,
multiplier polynomials of periodic cycles, the resultant invariants
tying them to cyclotomic polynomials, Newton polygons for the degree
valuation in the parameter, and the classification of rational
parameters with a non-repelling cycle.
"""

from .errors import (
    BoundTooSmall,
    DivisionNotExact,
    GuardrailExceeded,
    NotInSubring,
    NotPerfectPower,
    ZeroPolynomial,
)
from .families import Family, dynatomic, iterate, multiplier_poly
from .invariants import delta_nm, rescale_extract
from .newton import NewtonPolygon
from .parabolic import classify, classify_logistic, enumerate_candidates
from .polycore import BiPoly, IntPoly

__version__ = "0.1.0"

__all__ = [
    "BiPoly",
    "BoundTooSmall",
    "DivisionNotExact",
    "Family",
    "GuardrailExceeded",
    "IntPoly",
    "NewtonPolygon",
    "NotInSubring",
    "NotPerfectPower",
    "ZeroPolynomial",
    "classify",
    "classify_logistic",
    "delta_nm",
    "dynatomic",
    "enumerate_candidates",
    "iterate",
    "multiplier_poly",
    "rescale_extract",
]

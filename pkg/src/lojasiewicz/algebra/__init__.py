"""Exact scalar, polynomial, residue-ring and truncated-series arithmetic."""

from .bivariate import BivariatePolynomial, is_y_regular, order, shear
from .elimination import (
    coprime_basis,
    divides,
    exact_quotient,
    gcd,
    multiplicity,
    normalize,
    resultant_y,
    squarefree_layers,
    squarefree_part,
)
from .extended import INFINITE, format_extended, is_infinite, parse_extended
from .rings import QQ, ExtensionElement, ExtensionRing, RationalField, Split
from .series import ZERO_TO_PRECISION, TruncatedSeries, substitute

__all__ = [
    "BivariatePolynomial",
    "ExtensionElement",
    "ExtensionRing",
    "INFINITE",
    "QQ",
    "RationalField",
    "Split",
    "TruncatedSeries",
    "ZERO_TO_PRECISION",
    "coprime_basis",
    "divides",
    "exact_quotient",
    "format_extended",
    "gcd",
    "is_infinite",
    "is_y_regular",
    "multiplicity",
    "normalize",
    "order",
    "parse_extended",
    "resultant_y",
    "shear",
    "squarefree_layers",
    "squarefree_part",
    "substitute",
]

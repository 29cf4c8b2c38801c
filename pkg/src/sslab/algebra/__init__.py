from .field import FieldCtx, PrimeField, QuadField, field_make
from .poly import UniPoly, factor, interpolate, poly_gcd, roots
from .bipoly import BiPoly, resultant

__all__ = [
    "BiPoly",
    "FieldCtx",
    "PrimeField",
    "QuadField",
    "UniPoly",
    "factor",
    "field_make",
    "interpolate",
    "poly_gcd",
    "resultant",
    "roots",
]

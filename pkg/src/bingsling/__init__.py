"""Exact computations around Conway potentials of wild-knot constructions.

Submodules:

* ``laurent``, ``series``, ``cyclotomic``, ``linalg``: exact algebra core
* ``conway``: Fibonacci/Lucas polynomials, cover-family potentials, link operations
* ``walgebra``: the (u, v, w) ring, reduced potentials and their coefficient series
* ``rationality``: rational fitting and non-rationality certificates
* ``groups``: Heisenberg group, its twisted product with Z, free product Z/3 * Z/2
* ``knotmodule``: module presentations over Laurent rings
"""
from .errors import BingslingError, DomainError, LibraryDefect, ResourceError, UsageError
from .laurent import LaurentPoly, substitute_u, unsubstitute_u
from .series import RationalSeries, TruncatedSeries
from .cyclotomic import resultant, roots_of_unity_product

__version__ = "0.1.0"


def poly_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def series_inverse(s: TruncatedSeries) -> TruncatedSeries:
    return s.inverse()


__all__ = [
    "BingslingError", "DomainError", "LibraryDefect", "ResourceError", "UsageError",
    "LaurentPoly", "substitute_u", "unsubstitute_u", "RationalSeries", "TruncatedSeries",
    "resultant", "roots_of_unity_product", "poly_mul", "series_inverse",
]

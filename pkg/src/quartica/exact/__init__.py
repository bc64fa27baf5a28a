"""Exact scalars and polynomials: rationals, quadratic extensions, UniPoly/BiPoly, roots."""

from .poly import BiPoly, UniPoly
from .quadext import QuadExt, conj, is_rational_scalar, to_rational
from .rational import Rational, as_rational, format_rational, rat_is_square, split_square
from .roots import ConjugatePair, NoRoot, OneRational, RootSet, TwoRational, rational_roots, solve_quadratic

__all__ = [
    "BiPoly",
    "ConjugatePair",
    "NoRoot",
    "OneRational",
    "QuadExt",
    "Rational",
    "RootSet",
    "TwoRational",
    "UniPoly",
    "as_rational",
    "conj",
    "format_rational",
    "is_rational_scalar",
    "rat_is_square",
    "rational_roots",
    "solve_quadratic",
    "split_square",
    "to_rational",
]

"""Exact roots of rational polynomials: quadratics in closed form, rational roots in general."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Union

from .poly import UniPoly
from .quadext import QuadExt
from .rational import lcm, rat_is_square, split_square


@dataclass(frozen=True)
class TwoRational:
    r1: Fraction
    r2: Fraction

    @property
    def roots(self) -> tuple[Fraction, Fraction]:
        return (self.r1, self.r2)


@dataclass(frozen=True)
class ConjugatePair:
    root: QuadExt
    conjugate: QuadExt

    @property
    def roots(self) -> tuple[QuadExt, QuadExt]:
        return (self.root, self.conjugate)


@dataclass(frozen=True)
class OneRational:
    r: Fraction

    @property
    def roots(self) -> tuple[Fraction]:
        return (self.r,)


@dataclass(frozen=True)
class NoRoot:
    @property
    def roots(self) -> tuple:
        return ()


RootSet = Union[TwoRational, ConjugatePair, OneRational, NoRoot]


def solve_quadratic(p: UniPoly) -> RootSet:
    """Roots of a rational polynomial of degree <= 2.

    An irrational pair is returned in the extension generated by the
    discriminant with its square part pulled out, so r^2 + 169/7056 yields
    +-(13/84)*sqrt(-1).  ``ConjugatePair.root`` is the one with positive
    irrational part.
    """
    if p.is_zero():
        raise ValueError("zero polynomial: every value is a root")
    if p.degree > 2:
        raise ValueError(f"degree {p.degree} polynomial passed to solve_quadratic")
    if p.degree == 0:
        return NoRoot()
    if p.degree == 1:
        return OneRational(-p.coeff(0) / p.coeff(1))
    c, b, a = p.coeffs
    disc = b * b - 4 * a * c
    root = rat_is_square(disc)
    if root is not None:
        r1 = (-b - root) / (2 * a)
        r2 = (-b + root) / (2 * a)
        return TwoRational(min(r1, r2), max(r1, r2))
    scale, d = split_square(disc)
    im = abs(scale / (2 * a))
    e = QuadExt(-b / (2 * a), im, d)
    return ConjugatePair(e, e.conj())


def _integer_coeffs(p: UniPoly) -> list[int]:
    """Primitive integer multiple of a rational polynomial."""
    den = 1
    for c in p.coeffs:
        den = lcm(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in p.coeffs]
    g = 0
    for c in ints:
        g = gcd(g, c)
    return [c // g for c in ints]


def _divisors(n: int) -> list[int]:
    from sympy import divisors  # heavy import, only on the degree >= 3 path

    return [int(d) for d in divisors(abs(n))]


def rational_roots(p: UniPoly) -> list[Fraction]:
    """Distinct rational roots of a nonzero rational polynomial, sorted ascending.

    Powers of the variable are factored out first (root 0).  A remaining
    factor of degree <= 2 is solved in closed form; higher degrees go through
    the rational root theorem on the primitive integer form.
    """
    if p.is_zero():
        raise ValueError("zero polynomial: every value is a root")
    coeffs = list(p.coeffs)
    found: set[Fraction] = set()
    if coeffs[0] == 0:
        found.add(Fraction(0))
        while coeffs[0] == 0:
            coeffs.pop(0)
    rest = UniPoly(coeffs)
    if rest.degree <= 2:
        rs = solve_quadratic(rest)
        if not isinstance(rs, ConjugatePair):
            found.update(rs.roots)
        return sorted(found)

    ints = _integer_coeffs(rest)
    const, lead = ints[0], ints[-1]
    for q in _divisors(lead):
        for pnum in _divisors(const):
            for cand in (Fraction(pnum, q), Fraction(-pnum, q)):
                if cand in found:
                    continue
                acc = 0
                # Horner on integers scaled by q^deg avoids Fraction churn
                num, den = cand.numerator, cand.denominator
                power = 1
                for c in reversed(ints):
                    acc = acc * num + c * power
                    power *= den
                if acc == 0:
                    found.add(cand)
    return sorted(found)

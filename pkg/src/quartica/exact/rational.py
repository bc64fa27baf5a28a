"""Rational scalars.

The scalar type is :class:`fractions.Fraction`, which already keeps a
positive, reduced denominator after every operation.  This module only adds
parsing, square detection and the square-factor split used when a
discriminant is turned into an extension field.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt
from typing import Optional, Union

Rational = Fraction
RationalLike = Union[int, Fraction, str]

# Trial-division bound for pulling square factors out of a discriminant.
_SQUARE_SPLIT_BOUND = 10_000


def as_rational(value: RationalLike) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings to Fraction.  Floats are rejected."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if any(ch in text for ch in ".eE"):
            raise ValueError(f"not an exact rational: {value!r}")
        return Fraction(text)
    raise TypeError(f"cannot interpret {type(value).__name__} as an exact rational")


def format_rational(q: Fraction) -> str:
    """Render as "p/q", or "p" when the denominator is 1."""
    return str(q)


def _int_sqrt(n: int) -> Optional[int]:
    if n < 0:
        return None
    root = isqrt(n)
    return root if root * root == n else None


def rat_is_square(q: RationalLike) -> Optional[Fraction]:
    """Return the nonnegative rational square root of ``q``, or None."""
    q = as_rational(q)
    if q < 0:
        return None
    num = _int_sqrt(q.numerator)
    if num is None:
        return None
    den = _int_sqrt(q.denominator)
    if den is None:
        return None
    return Fraction(num, den)


def _split_int_square(n: int) -> tuple[int, int]:
    """Write n > 0 as c^2 * k with k free of small square factors.

    Square factors from primes up to a fixed bound are removed, then the
    cofactor is removed entirely if it is itself a perfect square.  The split
    is deterministic, which is all field identity needs.
    """
    c = 1
    k = n
    p = 2
    while p <= _SQUARE_SPLIT_BOUND and p * p <= k:
        pp = p * p
        while k % pp == 0:
            k //= pp
            c *= p
        p += 1 if p == 2 else 2
    root = _int_sqrt(k)
    if root is not None and k > 1:
        c *= root
        k = 1
    return c, k


def split_square(q: RationalLike) -> tuple[Fraction, int]:
    """Write a nonzero rational as c^2 * d with c rational and d an integer.

    d keeps the sign of q and carries no small square factors; e.g.
    -169/7056 -> (13/84, -1).
    """
    q = as_rational(q)
    if q == 0:
        raise ValueError("zero has no square split")
    sign = -1 if q < 0 else 1
    # q = p/r = p*r / r^2
    p, r = abs(q.numerator), q.denominator
    c, k = _split_int_square(p * r)
    return Fraction(c, r), sign * k


def lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b

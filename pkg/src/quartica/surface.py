"""The surface x^4 + y^4 = z^4 + w^4 and its companion system of quadrics.

A point on the surface corresponds to a point (a, b, x, y, z, w) of

    a*x^2 - b*y^2 = a*z^2 + b*w^2
    b*x^2 + a*y^2 = -b*z^2 + a*w^2

with a/b = (x^2 + z^2)/(w^2 - y^2).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Callable, Iterator

from .errors import DegenerateError, NotASolutionError
from .exact.rational import RationalLike, as_rational, format_rational, lcm


@dataclass(frozen=True)
class QuarticPoint:
    x: Fraction
    y: Fraction
    z: Fraction
    w: Fraction

    def __post_init__(self) -> None:
        for name in ("x", "y", "z", "w"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))

    @classmethod
    def of(cls, x: RationalLike, y: RationalLike, z: RationalLike, w: RationalLike) -> QuarticPoint:
        return cls(as_rational(x), as_rational(y), as_rational(z), as_rational(w))

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.x, self.y, self.z, self.w)

    def scaled(self, lam) -> QuarticPoint:
        return QuarticPoint(*(lam * c for c in self.as_tuple()))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.as_tuple())

    def int_tuple(self) -> tuple[int, int, int, int]:
        if not self.is_integral():
            raise ValueError(f"{self} is not integral")
        return tuple(c.numerator for c in self.as_tuple())  # type: ignore[return-value]

    def to_json(self) -> dict[str, str]:
        return {k: format_rational(v) for k, v in zip("xyzw", self.as_tuple())}

    @classmethod
    def from_json(cls, obj: dict) -> QuarticPoint:
        return cls.of(obj["x"], obj["y"], obj["z"], obj["w"])

    def equation(self) -> str:
        """Human-readable "x^4 + y^4 = z^4 + w^4" with values substituted."""

        def term(v: Fraction) -> str:
            s = format_rational(v)
            return f"({s})^4" if (v < 0 or v.denominator != 1) else f"{s}^4"

        return f"{term(self.x)} + {term(self.y)} = {term(self.z)} + {term(self.w)}"

    def __str__(self) -> str:
        return "(" + ", ".join(format_rational(c) for c in self.as_tuple()) + ")"


@dataclass(frozen=True)
class SystemPoint:
    a: Fraction
    b: Fraction
    x: Fraction
    y: Fraction
    z: Fraction
    w: Fraction


def quartic_residual(p: QuarticPoint) -> Fraction:
    return p.x**4 + p.y**4 - p.z**4 - p.w**4


def is_solution(p: QuarticPoint) -> bool:
    return quartic_residual(p) == 0


def _require_solution(p: QuarticPoint) -> None:
    res = quartic_residual(p)
    if res != 0:
        raise NotASolutionError(f"{p} is not on the surface (residual {res})")


def system_residuals(p: SystemPoint) -> tuple[Fraction, Fraction]:
    x2, y2, z2, w2 = p.x**2, p.y**2, p.z**2, p.w**2
    first = p.a * x2 - p.b * y2 - (p.a * z2 + p.b * w2)
    second = p.b * x2 + p.a * y2 - (-p.b * z2 + p.a * w2)
    return first, second


def ab_from_quartic(p: QuarticPoint) -> tuple[Fraction, Fraction]:
    """(a, b) with b = 1 that put a surface point on the companion system."""
    _require_solution(p)
    den = p.w**2 - p.y**2
    if den == 0:
        raise DegenerateError(f"{p}: w^2 = y^2, point is in a trivial orbit")
    return (p.x**2 + p.z**2) / den, Fraction(1)


def is_trivial(p: QuarticPoint) -> bool:
    """True iff p is a signed/permuted/scaled copy of (m, n, m, n) or (s, t, -t, s).

    Both families are exactly the points whose two sides carry the same pair
    of absolute values.
    """
    _require_solution(p)
    left = sorted((abs(p.x), abs(p.y)))
    right = sorted((abs(p.z), abs(p.w)))
    return left == right


# -- symmetry group ---------------------------------------------------------


def flip_sign(p: QuarticPoint, index: int) -> QuarticPoint:
    coords = list(p.as_tuple())
    coords[index] = -coords[index]
    return QuarticPoint(*coords)


def swap_left(p: QuarticPoint) -> QuarticPoint:
    return QuarticPoint(p.y, p.x, p.z, p.w)


def swap_right(p: QuarticPoint) -> QuarticPoint:
    return QuarticPoint(p.x, p.y, p.w, p.z)


def swap_sides(p: QuarticPoint) -> QuarticPoint:
    return QuarticPoint(p.z, p.w, p.x, p.y)


def symmetry_generators() -> Iterator[Callable[[QuarticPoint], QuarticPoint]]:
    """Generators of the group used for deduplication (scaling excluded)."""
    for i in range(4):
        yield lambda p, i=i: flip_sign(p, i)
    yield swap_left
    yield swap_right
    yield swap_sides


def primitive_integer(p: QuarticPoint) -> QuarticPoint:
    """Scale to coprime integers; the overall sign is left as is."""
    coords = p.as_tuple()
    if all(c == 0 for c in coords):
        raise DegenerateError("the zero point has no primitive form")
    den = 1
    for c in coords:
        den = lcm(den, c.denominator)
    ints = [int(c * den) for c in coords]
    g = 0
    for c in ints:
        g = gcd(g, c)
    return QuarticPoint(*(Fraction(c // g) for c in ints))


def canonicalize(p: QuarticPoint) -> QuarticPoint:
    """Orbit representative: coprime nonnegative integers, |x|<=|y|, |z|<=|w|, (x,y)<=(z,w)."""
    _require_solution(p)
    q = primitive_integer(p)
    left = tuple(sorted((abs(q.x), abs(q.y))))
    right = tuple(sorted((abs(q.z), abs(q.w))))
    if right < left:
        left, right = right, left
    return QuarticPoint(*left, *right)


def canonical_key(p: QuarticPoint) -> tuple[int, int, int, int]:
    return canonicalize(p).int_tuple()

"""The two-parameter family of plane cubics C_{s,t} and its maps to and from the surface.

For parameters (s, t) the family member is the cubic in (m, n, r)

    A * 2(s+t)(m^2 - n*r*s + n*r*t) = B * 2(s-t)(n^2 - m*r*s - m*r*t)

with the linear forms

    A = 2ms^2 - 2ns^2 + rs^3 - rs^2t + 2mt^2 + 2nt^2 - rst^2 + rt^3
    B = -2ms^2 + 2ns^2 + rs^3 + rs^2t + 2mt^2 + 2nt^2 - rst^2 - rt^3.

A point (m, n, r) is tied to the surface through the fiber line
(mg + s, ng + t, mg - t, ng + s), g ranging over Q.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from typing import Any

from .errors import DegenerateError, NotASolutionError
from .exact.poly import BiPoly, UniPoly
from .exact.quadext import QuadExt, conj, is_rational_scalar, to_rational
from .exact.rational import RationalLike, as_rational, format_rational
from .exact.roots import rational_roots
from .surface import QuarticPoint, is_trivial, quartic_residual


def _scalar(v):
    if isinstance(v, (QuadExt, Fraction)):
        return v
    return as_rational(v)


def _scalar_json(v):
    return v.to_json() if isinstance(v, QuadExt) else format_rational(v)


def _scalar_from_json(v):
    return QuadExt.from_json(v) if isinstance(v, dict) else as_rational(v)


@dataclass(frozen=True)
class CurveParams:
    s: Fraction
    t: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "s", as_rational(self.s))
        object.__setattr__(self, "t", as_rational(self.t))

    def check(self, *, nonzero: bool = False) -> None:
        """Raise DegenerateError unless s != +-t (and s*t != 0 when asked)."""
        if self.s == self.t or self.s == -self.t:
            raise DegenerateError(f"degenerate parameters s={self.s}, t={self.t}: s = +-t")
        if nonzero and self.s * self.t == 0:
            raise DegenerateError(f"degenerate parameters s={self.s}, t={self.t}: s*t = 0")

    @cached_property
    def coefficients(self) -> tuple:
        return family_coefficients(self.s, self.t)

    def seed_a(self) -> Fraction:
        """a-value of the seed point (s, t, -t, s) on the companion system."""
        self.check()
        return (self.s**2 + self.t**2) / (self.s**2 - self.t**2)

    def to_json(self) -> dict[str, str]:
        return {"s": format_rational(self.s), "t": format_rational(self.t)}

    @classmethod
    def from_json(cls, obj: dict) -> CurveParams:
        return cls(as_rational(obj["s"]), as_rational(obj["t"]))


@dataclass(frozen=True)
class CubicPoint:
    """Projective point (m, n, r); coordinates are rationals or share one extension field."""

    m: Any
    n: Any
    r: Any

    def __post_init__(self) -> None:
        for name in ("m", "n", "r"):
            object.__setattr__(self, name, _scalar(getattr(self, name)))
        if self.m == 0 and self.n == 0 and self.r == 0:
            raise DegenerateError("(0, 0, 0) is not a projective point")

    @classmethod
    def of(cls, m: RationalLike, n: RationalLike, r: RationalLike) -> CubicPoint:
        return cls(as_rational(m), as_rational(n), as_rational(r))

    def coords(self) -> tuple:
        return (self.m, self.n, self.r)

    def scaled(self, lam) -> CubicPoint:
        return CubicPoint(*(lam * c for c in self.coords()))

    def conj(self) -> CubicPoint:
        return CubicPoint(*(conj(c) for c in self.coords()))

    def is_rational(self) -> bool:
        return all(is_rational_scalar(c) for c in self.coords())

    def to_rational(self) -> CubicPoint:
        """Cast to Fraction coordinates; raises ValueError if any irrational part is nonzero."""
        return CubicPoint(*(to_rational(c) for c in self.coords()))

    def proportional_to(self, other: CubicPoint) -> bool:
        a, b = self.coords(), other.coords()
        return all(a[i] * b[j] - a[j] * b[i] == 0 for i, j in ((0, 1), (0, 2), (1, 2)))

    def to_json(self) -> dict:
        return {k: _scalar_json(v) for k, v in zip("mnr", self.coords())}

    @classmethod
    def from_json(cls, obj: dict) -> CubicPoint:
        return cls(*(_scalar_from_json(obj[k]) for k in "mnr"))

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coords()) + ")"


ExtCubicPoint = CubicPoint


def line_point(g, base: CubicPoint, direction: CubicPoint) -> CubicPoint:
    """The point g*base + direction."""
    return CubicPoint(*(g * b + d for b, d in zip(base.coords(), direction.coords())))


# -- the family polynomial ---------------------------------------------------
# Written over plain ring operations so it runs on Fraction, QuadExt, UniPoly
# and BiPoly arguments alike.


def form_a(m, n, r, s, t):
    return 2*m*s**2 - 2*n*s**2 + r*s**3 - r*s**2*t + 2*m*t**2 + 2*n*t**2 - r*s*t**2 + r*t**3


def form_b(m, n, r, s, t):
    return -2*m*s**2 + 2*n*s**2 + r*s**3 + r*s**2*t + 2*m*t**2 + 2*n*t**2 - r*s*t**2 - r*t**3


def denom_first(m, n, r, s, t):
    return 2 * (s - t) * (n*n - m*r*s - m*r*t)


def denom_second(m, n, r, s, t):
    return 2 * (s + t) * (m*m - n*r*s + n*r*t)


def family_residual_literal(m, n, r, s, t):
    """LHS - RHS of the family equation, term for term as written."""
    return form_a(m, n, r, s, t) * denom_second(m, n, r, s, t) - form_b(m, n, r, s, t) * denom_first(m, n, r, s, t)


def family_coefficients(s, t) -> tuple:
    """Coefficients (a_m, a_n, a_r, b_m, b_n, b_r, 2(s+t), 2(s-t), s-t, s+t) of the factored family."""
    s2, t2 = s * s, t * t
    plus, minus = s + t, s - t
    a_r = s2 * s - s2 * t - s * t2 + t2 * t
    b_r = s2 * s + s2 * t - s * t2 - t2 * t
    return (2 * s2 + 2 * t2, 2 * t2 - 2 * s2, a_r, 2 * t2 - 2 * s2, 2 * s2 + 2 * t2, b_r,
            2 * plus, 2 * minus, minus, plus)


def family_residual(m, n, r, s, t, coeffs: tuple | None = None):
    """LHS - RHS of the family equation.

    Evaluated as (A)(2(s+t))(m^2 - (s-t)nr) - (B)(2(s-t))(n^2 - (s+t)mr), with
    the s,t-dependent coefficients computed once (or passed in).
    """
    a_m, a_n, a_r, b_m, b_n, b_r, two_plus, two_minus, minus, plus = coeffs or family_coefficients(s, t)
    lin_a = a_m * m + a_n * n + a_r * r
    lin_b = b_m * m + b_n * n + b_r * r
    return lin_a * two_plus * (m * m - minus * n * r) - lin_b * two_minus * (n * n - plus * m * r)


def curve_residual(c: CubicPoint, p: CurveParams):
    return family_residual(c.m, c.n, c.r, p.s, p.t, p.coefficients)


def on_curve(c: CubicPoint, p: CurveParams) -> bool:
    return curve_residual(c, p) == 0


def g_from_first(c: CubicPoint, p: CurveParams) -> Fraction:
    """Fiber parameter solving the first system equation."""
    den = denom_first(c.m, c.n, c.r, p.s, p.t)
    if den == 0:
        raise DegenerateError("first g-formula denominator vanishes")
    return form_a(c.m, c.n, c.r, p.s, p.t) / den


def g_from_second(c: CubicPoint, p: CurveParams) -> Fraction:
    """Fiber parameter solving the second system equation."""
    den = denom_second(c.m, c.n, c.r, p.s, p.t)
    if den == 0:
        raise DegenerateError("second g-formula denominator vanishes")
    return form_b(c.m, c.n, c.r, p.s, p.t) / den


def g_value(c: CubicPoint, p: CurveParams) -> Fraction:
    """Whichever g-formula is defined; DegenerateError at base points."""
    try:
        return g_from_first(c, p)
    except DegenerateError:
        pass
    try:
        return g_from_second(c, p)
    except DegenerateError:
        raise DegenerateError(f"{c} is a base point of both g-formulas") from None


# -- fibers ------------------------------------------------------------------


def lift(c: CubicPoint, p: CurveParams, g) -> QuarticPoint:
    g = as_rational(g)
    mg, ng = to_rational(c.m) * g, to_rational(c.n) * g
    return QuarticPoint(mg + p.s, ng + p.t, mg - p.t, ng + p.s)


def g_polynomial(m: RationalLike, n: RationalLike, p: CurveParams) -> UniPoly:
    """(mg+s)^4 + (ng+t)^4 - (mg-t)^4 - (ng+s)^4 as a polynomial in g.

    The constant and g^4 terms cancel, leaving
    g * [4(m^3(s+t) - n^3(s-t)) g^2 + 6(m^2-n^2)(s^2-t^2) g + 4((m-n)s^3 + (m+n)t^3)].
    """
    m, n = as_rational(m), as_rational(n)
    s, t = p.s, p.t
    return UniPoly((
        0,
        4 * ((m - n) * s**3 + (m + n) * t**3),
        6 * (m * m - n * n) * (s * s - t * t),
        4 * (m**3 * (s + t) - n**3 * (s - t)),
    ))


def fiber_roots(m: RationalLike, n: RationalLike, p: CurveParams) -> list[Fraction]:
    """Nonzero rational roots of the fiber polynomial (empty if it vanishes identically)."""
    poly = g_polynomial(m, n, p)
    if poly.is_zero():
        return []
    return [g for g in rational_roots(poly) if g != 0]


def fiber_solutions(c: CubicPoint, p: CurveParams) -> list[tuple[Fraction, QuarticPoint]]:
    """Every nonzero rational fiber root with its lift, ascending in g."""
    c = c.to_rational()
    out = []
    for g in fiber_roots(c.m, c.n, p):
        q = lift(c, p, g)
        assert quartic_residual(q) == 0, (c, p, g)
        out.append((g, q))
    return out


def image_of_quartic(q: QuarticPoint) -> tuple[CubicPoint, CurveParams]:
    """The cubic point and parameters whose fiber passes through q at g = 1."""
    res = quartic_residual(q)
    if res != 0:
        raise NotASolutionError(f"{q} is not on the surface (residual {res})")
    if is_trivial(q):
        raise DegenerateError(f"{q} lies in a trivial orbit; it has no image")
    x, y, z, w = q.as_tuple()
    m = (x - w + y + z) / 2
    n = (y + z - x + w) / 2
    params = CurveParams(x - m, y - n)
    params.check()
    r = (x * x + z * z) / (w * w - y * y) - params.seed_a()
    return CubicPoint(m, n, r), params


# -- Euler's point and solution ---------------------------------------------


def euler_point(p: CurveParams) -> CubicPoint:
    """The rational point lying on every family member, normalized to r = 1."""
    p.check(nonzero=True)
    s, t = p.s, p.t
    den = 4 * s * s * t * t
    m = -(s**5 - s**3 * t**2 - s**2 * t**3 + t**5) / den
    n = -(s**5 - s**3 * t**2 + s**2 * t**3 - t**5) / den
    return CubicPoint(m, n, Fraction(1))


def euler_polys() -> tuple[BiPoly, BiPoly, BiPoly, BiPoly]:
    s, t = BiPoly.s(), BiPoly.t()
    x = s * (s**6 + s**4 * t**2 - 2 * s**2 * t**4 - 3 * s * t**5 + t**6)
    y = t * (s**6 + 3 * s**5 * t - 2 * s**4 * t**2 + s**2 * t**4 + t**6)
    z = -t * (s**6 - 3 * s**5 * t - 2 * s**4 * t**2 + s**2 * t**4 + t**6)
    w = s * (s**6 + s**4 * t**2 - 2 * s**2 * t**4 + 3 * s * t**5 + t**6)
    return x, y, z, w


def euler_solution(p: CurveParams) -> QuarticPoint:
    s, t = p.s, p.t
    return QuarticPoint(
        s * (s**6 + s**4 * t**2 - 2 * s**2 * t**4 - 3 * s * t**5 + t**6),
        t * (s**6 + 3 * s**5 * t - 2 * s**4 * t**2 + s**2 * t**4 + t**6),
        -t * (s**6 - 3 * s**5 * t - 2 * s**4 * t**2 + s**2 * t**4 + t**6),
        s * (s**6 + s**4 * t**2 - 2 * s**2 * t**4 + 3 * s * t**5 + t**6),
    )


def euler_fiber_g(p: CurveParams) -> Fraction:
    """Fiber root of the Euler point that lifts to Euler's solution (scaled)."""
    p.check(nonzero=True)
    s, t = p.s, p.t
    den = (s * s - t * t) * (s**6 - 2 * s**4 * t**2 - 2 * s**2 * t**4 + t**6)
    if den == 0:
        raise DegenerateError(f"Euler fiber root undefined at s={s}, t={t}")
    return -12 * s**4 * t**4 / den


# -- pairs -------------------------------------------------------------------


def pair_of(q: QuarticPoint) -> QuarticPoint:
    """The second nonzero-g solution on the fiber line through q.

    Returned unscaled, so that pair_of(pair_of(q)) == q exactly.
    """
    c, p = image_of_quartic(q)
    others = [g for g in fiber_roots(c.m, c.n, p) if g != 1]
    if not others:
        raise DegenerateError(f"{q}: fiber has no second rational root")
    return lift(c, p, others[0])


def verify_parametric_family(x: BiPoly, y: BiPoly, z: BiPoly, w: BiPoly) -> BiPoly:
    """x^4 + y^4 - z^4 - w^4; the zero polynomial iff the family is an identity."""
    return x**4 + y**4 - z**4 - w**4


__all__ = [
    "CubicPoint",
    "CurveParams",
    "ExtCubicPoint",
    "curve_residual",
    "euler_fiber_g",
    "euler_point",
    "euler_polys",
    "euler_solution",
    "family_residual",
    "fiber_roots",
    "fiber_solutions",
    "form_a",
    "form_b",
    "g_from_first",
    "g_from_second",
    "g_polynomial",
    "g_value",
    "image_of_quartic",
    "lift",
    "line_point",
    "on_curve",
    "pair_of",
    "verify_parametric_family",
]

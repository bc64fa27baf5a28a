"""Chord and tangent constructions on a family member, over Q or a quadratic extension."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Optional

from .cubic import CubicPoint, CurveParams, curve_residual, line_point
from .errors import DegenerateError, OffCurveError
from .exact.poly import UniPoly
from .exact.quadext import QuadExt

# Sample parameters for recovering the cubic in g by interpolation.
_SAMPLES = (0, 1, -1, 2)


def line_poly(base: CubicPoint, direction: CubicPoint, p: CurveParams) -> UniPoly:
    """curve_residual(g*base + direction) as a cubic polynomial in g.

    Recovered from the values at g = 0, 1, -1, 2; the leading coefficient is
    the residual at ``base`` and the constant one the residual at ``direction``.
    """
    if base.proportional_to(direction):
        raise DegenerateError("line through proportional points is undefined")
    v0, v1, vm, v2 = (curve_residual(line_point(g, base, direction), p) for g in _SAMPLES)
    c0 = v0
    even = (v1 + vm) / 2
    odd = (v1 - vm) / 2  # c1 + c3
    c2 = even - c0
    c1_4c3 = (v2 - c0 - 4 * c2) / 2  # c1 + 4*c3
    c3 = (c1_4c3 - odd) / 3
    c1 = odd - c3
    return UniPoly((c0, c1, c2, c3))


def _require_on_curve(c: CubicPoint, p: CurveParams, label: str) -> None:
    res = curve_residual(c, p)
    if res != 0:
        raise OffCurveError(f"{label} {c} is not on the curve (residual {res})")


# Direction templates for the tangent construction, as functions of the free k.
TANGENT_TEMPLATES: tuple[Callable[[Fraction], CubicPoint], ...] = (
    lambda k: CubicPoint(k, 1, 2),
    lambda k: CubicPoint(k, 1, 0),
    lambda k: CubicPoint(k, 0, 1),
    lambda k: CubicPoint(0, k, 1),
)


def _tangent_k(c: CubicPoint, p: CurveParams, template) -> Optional[Fraction]:
    # g^2 coefficient of line_poly is the polar of c along the direction, affine in k
    def polar(k):
        d = template(Fraction(k))
        if c.proportional_to(d):
            return None
        return line_poly(c, d, p).coeff(2)

    p0, p1 = polar(0), polar(1)
    if p0 is None or p1 is None or p1 - p0 == 0:
        return None
    return -p0 / (p1 - p0)


def tangent_step(c: CubicPoint, p: CurveParams) -> tuple[Fraction, Fraction, CubicPoint]:
    """Tangent third intersection at a rational on-curve point.

    Returns (k, g, point): the tuned direction coordinate, the line parameter
    and the point g*c + direction(k).
    """
    _require_on_curve(c, p, "base")
    for template in TANGENT_TEMPLATES:
        k = _tangent_k(c, p, template)
        if k is None:
            continue
        d = template(k)
        if c.proportional_to(d):
            continue
        poly = line_poly(c, d, p)
        assert poly.coeff(3) == 0 and poly.coeff(2) == 0
        c1, c0 = poly.coeff(1), poly.coeff(0)
        if c1 == 0:
            if c0 == 0:
                continue  # line lies in the curve
            return k, None, c  # flex: the tangent meets c three times
        g = -c0 / c1
        return k, g, line_point(g, c, d)
    raise DegenerateError(f"every tangent direction template degenerates at {c}")


def tangent_double(c: CubicPoint, p: CurveParams) -> CubicPoint:
    return tangent_step(c, p)[2]


def chord_param(p1: CubicPoint, p2: CubicPoint, p: CurveParams):
    """Line parameter g of the third intersection g*p1 + p2, or None if the chord is tangent at p1."""
    poly = line_poly(p1, p2, p)
    # end coefficients are the residuals of the two points
    if poly.coeff(3) != 0:
        raise OffCurveError(f"first point {p1} is not on the curve (residual {poly.coeff(3)})")
    if poly.coeff(0) != 0:
        raise OffCurveError(f"second point {p2} is not on the curve (residual {poly.coeff(0)})")
    a2, a1 = poly.coeff(2), poly.coeff(1)
    if a2 == 0 and a1 == 0:
        raise DegenerateError("the chord lies inside the curve")
    if a2 == 0:
        return None
    return -a1 / a2


def chord_third(p1: CubicPoint, p2: CubicPoint, p: CurveParams) -> CubicPoint:
    """Third intersection of the line through p1 and p2, parametrized as g*p1 + p2.

    A chord tangent at p1 returns p1 itself.
    """
    g = chord_param(p1, p2, p)
    if g is None:
        return p1
    return line_point(g, p1, p2)


def conj_descend(e: CubicPoint, p: CurveParams) -> CubicPoint:
    """Rational point cut out by the chord through e and its conjugate.

    With u the chord parameter, the third point u*e + conj(e) is rational up
    to the factor 1/(1+u); that normalization is applied and every irrational
    part is checked to vanish before casting.
    """
    if e.is_rational():
        raise DegenerateError(f"{e} is rational; it has no distinct conjugate")
    e_bar = e.conj()
    u = chord_param(e, e_bar, p)
    if u is None:
        raise DegenerateError("chord through conjugate points is tangent; no new point")
    point = line_point(u, e, e_bar)
    if 1 + u != 0:
        point = point.scaled(1 / (1 + u))
    else:
        # point = conj(e) - e is purely irrational
        d = next(c.d for c in e.coords() if isinstance(c, QuadExt))
        point = point.scaled(1 / QuadExt.sqrt(d))
    for coord in point.coords():
        if isinstance(coord, QuadExt) and coord.im != 0:
            raise AssertionError(f"conjugate descent left an irrational part in {point}")
    return point.to_rational()

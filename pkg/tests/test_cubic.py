from __future__ import annotations

from fractions import Fraction as F

import pytest
from hypothesis import assume, given, strategies as st

from quartica.chord import chord_third, tangent_double
from quartica.cubic import (
    CubicPoint,
    CurveParams,
    curve_residual,
    denom_first,
    euler_fiber_g,
    euler_point,
    euler_polys,
    euler_solution,
    family_residual,
    family_residual_literal,
    fiber_roots,
    fiber_solutions,
    g_from_first,
    g_from_second,
    g_polynomial,
    g_value,
    image_of_quartic,
    lift,
    pair_of,
    verify_parametric_family,
)
from quartica.errors import DegenerateError, NotASolutionError
from quartica.exact.poly import BiPoly, UniPoly
from quartica.exact.quadext import QuadExt
from quartica.surface import QuarticPoint, canonicalize, quartic_residual

Q = QuarticPoint.of
SMALLEST = Q(59, 158, 133, 134)
IMAGE = CubicPoint.of(108, 183, "-2797/592")
IMAGE_PARAMS = CurveParams(F(-49), F(-25))

small = st.integers(-9, 9)
params = st.tuples(st.integers(-7, 7), st.integers(-7, 7)).filter(
    lambda st_: st_[0] * st_[1] != 0 and abs(st_[0]) != abs(st_[1])
).map(lambda st_: CurveParams(F(st_[0]), F(st_[1])))
rationals = st.fractions(max_denominator=20).filter(lambda q: abs(q) < 50)
nonzero_rationals = rationals.filter(lambda q: q != 0)


def test_image_of_smallest_solution():
    c, p = image_of_quartic(SMALLEST)
    assert (c, p) == (IMAGE, IMAGE_PARAMS)
    assert curve_residual(c, p) == 0


def test_both_g_formulas_give_one_at_image():
    assert g_from_first(IMAGE, IMAGE_PARAMS) == 1
    assert g_from_second(IMAGE, IMAGE_PARAMS) == 1
    assert lift(IMAGE, IMAGE_PARAMS, 1) == SMALLEST


def test_g_polynomial_of_image():
    poly = g_polynomial(108, 183, IMAGE_PARAMS)
    assert poly == UniPoly([0, 17107200, -232567200, 215460000])
    assert fiber_roots(108, 183, IMAGE_PARAMS) == [F(264, 3325), F(1)]


def test_second_fiber_root_is_not_an_r_root():
    # the second fiber root differs from the second root in r
    c2 = CubicPoint.of(108, 183, "3193/296")
    assert curve_residual(c2, IMAGE_PARAMS) == 0
    assert g_from_first(c2, IMAGE_PARAMS) == F(264, 3325)


def test_pair_of_smallest_solution():
    pair = pair_of(SMALLEST)
    assert quartic_residual(pair) == 0
    assert pair.scaled(3325) == Q(-134413, -34813, 111637, -114613)
    assert pair_of(pair) == SMALLEST


def test_image_of_quartic_errors():
    with pytest.raises(NotASolutionError):
        image_of_quartic(Q(1, 2, 3, 4))
    with pytest.raises(DegenerateError):
        image_of_quartic(Q(3, 5, 3, 5))


def test_euler_point_and_solution_at_2_1():
    p = CurveParams(F(2), F(1))
    e = euler_point(p)
    assert e == CubicPoint.of("-21/16", "-27/16", 1)
    assert curve_residual(e, p) == 0
    assert euler_solution(p) == Q(134, 133, 59, 158)
    g = euler_fiber_g(p)
    assert g == F(-64, 25)
    assert lift(e, p, g).scaled(25) == Q(134, 133, 59, 158)
    # the Euler point is a zero of the first linear form, so g_from_first is 0 there
    assert g_from_first(e, p) == 0


def test_euler_point_degenerate_params():
    for s, t in ((1, 1), (2, -2), (0, 3)):
        with pytest.raises(DegenerateError):
            euler_point(CurveParams(F(s), F(t)))


def test_euler_family_identity():
    assert verify_parametric_family(*euler_polys()).is_zero()


def test_trivial_family_identity():
    s, t = BiPoly.s(), BiPoly.t()
    assert verify_parametric_family(s, t, t, s).is_zero()
    assert not verify_parametric_family(s, t, s, s).is_zero()


def test_euler_point_on_every_curve_symbolically():
    # clear the 4 s^2 t^2 denominators: (M, N, R) = (-(..), -(..), 4 s^2 t^2)
    s, t = BiPoly.s(), BiPoly.t()
    m = -(s**5 - s**3 * t**2 - s**2 * t**3 + t**5)
    n = -(s**5 - s**3 * t**2 + s**2 * t**3 - t**5)
    r = 4 * s**2 * t**2
    assert family_residual_literal(m, n, r, s, t).is_zero()


def test_g_polynomial_closed_form_symbolically():
    # expand (mg+s)^4 + (ng+t)^4 - (mg-t)^4 - (ng+s)^4 over a polynomial ring in g with fixed m, n, s, t
    g = UniPoly.x()
    for m, n, s, t in ((108, 183, -49, -25), (2, -3, 5, 7), (F(1, 2), 4, -1, 3)):
        direct = (g * m + s) ** 4 + (g * n + t) ** 4 - (g * m - t) ** 4 - (g * n + s) ** 4
        poly = g_polynomial(m, n, CurveParams(F(s), F(t)))
        assert poly == direct
        assert poly.coeff(0) == 0 and poly.coeff(4) == 0


def test_fiber_roots_zero_polynomial():
    assert fiber_roots(0, 0, CurveParams(F(2), F(1))) == []


# -- properties ----------------------------------------------------------------


@given(small, small, small, params, nonzero_rationals)
def test_fast_residual_matches_literal(m, n, r, p, lam):
    m, n, r = F(m), F(n), F(r) * lam
    assert family_residual(m, n, r, p.s, p.t) == family_residual_literal(m, n, r, p.s, p.t)


@given(small, small, small, params, nonzero_rationals)
def test_residual_homogeneous_of_degree_three(m, n, r, p, lam):
    assume((m, n, r) != (0, 0, 0))
    c = CubicPoint.of(m, n, r)
    assert curve_residual(c.scaled(lam), p) == lam**3 * curve_residual(c, p)


def test_residual_homogeneous_over_extension():
    i = QuadExt.sqrt(-1)
    c = CubicPoint(F(1), F(1), F(13, 84) * i)
    p = CurveParams(F(1), F(13))
    lam = 3 + 2 * i
    assert curve_residual(c, p) == 0
    assert curve_residual(c.scaled(lam), p) == 0


@given(params)
def test_euler_point_on_curve(p):
    assert curve_residual(euler_point(p), p) == 0


def _generated_points(p: CurveParams):
    e = euler_point(p)
    d = tangent_double(e, p)
    yield e
    yield d
    try:
        yield tangent_double(d, p)
    except DegenerateError:
        pass
    if not d.proportional_to(e):
        yield chord_third(d, e, p)


@given(params)
def test_g_formulas_agree_on_curve_points(p):
    for c in _generated_points(p):
        assert curve_residual(c, p) == 0
        try:
            g1, g2 = g_from_first(c, p), g_from_second(c, p)
        except DegenerateError:
            continue
        assert g1 == g2


@given(params)
def test_fiber_closure(p):
    for c in _generated_points(p):
        for g, q in fiber_solutions(c, p):
            assert quartic_residual(q) == 0
            assert g != 0


@given(params)
def test_lift_of_image_roundtrip(p):
    for c in _generated_points(p):
        for _, q in fiber_solutions(c, p):
            try:
                c2, p2 = image_of_quartic(q)
            except DegenerateError:
                continue
            assert lift(c2, p2, 1) == q
            assert curve_residual(c2, p2) == 0


@given(params)
def test_fiber_of_g_value_is_a_solution(p):
    c = tangent_double(euler_point(p), p)
    try:
        g = g_value(c, p)
    except DegenerateError:
        return
    assert quartic_residual(lift(c, p, g)) == 0


@given(params)
def test_pair_is_an_involution_up_to_canonical_form(p):
    q = euler_solution(p)
    try:
        pair = pair_of(q)
    except DegenerateError:
        return
    assert quartic_residual(pair) == 0
    assert canonicalize(pair_of(pair)) == canonicalize(q)


def test_denominator_vanishing_routes_to_other_formula():
    p = CurveParams(F(2), F(1))
    c = CubicPoint.of(F(1, 3), 1, 1)  # n^2 = m r (s+t)
    assert denom_first(c.m, c.n, c.r, p.s, p.t) == 0
    with pytest.raises(DegenerateError):
        g_from_first(c, p)


def test_cubic_point_validation_and_json():
    with pytest.raises(DegenerateError):
        CubicPoint.of(0, 0, 0)
    assert CubicPoint.from_json(IMAGE.to_json()) == IMAGE
    assert CurveParams.from_json(IMAGE_PARAMS.to_json()) == IMAGE_PARAMS

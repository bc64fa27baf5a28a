from __future__ import annotations

from fractions import Fraction as F

import pytest

from quartica.chord import tangent_double
from quartica.cubic import CurveParams, euler_point, euler_polys, euler_solution, fiber_solutions, pair_of, verify_parametric_family
from quartica.families import EULER, EULER_DOUBLE, EULER_DOUBLE_PAIR, EULER_PAIR, FAMILIES, Family
from quartica.surface import QuarticPoint, canonicalize

PARAMS = [(2, 1), (3, 2), (5, 3), (-4, 7)]


@pytest.mark.parametrize("name", sorted(FAMILIES))
def test_family_is_identity(name):
    fam = FAMILIES[name]
    assert all(f.is_homogeneous() for f in fam)
    assert verify_parametric_family(*fam).is_zero()


def test_euler_family_matches_closed_form():
    assert tuple(EULER) == euler_polys()


@pytest.mark.parametrize("name", sorted(FAMILIES))
def test_family_json_roundtrip(name):
    fam = FAMILIES[name]
    assert Family.from_json(fam.to_json()) == fam


@pytest.mark.parametrize("s,t", PARAMS)
def test_euler_family_evaluates_to_euler_solution(s, t):
    assert QuarticPoint(*EULER.evaluate(F(s), F(t))) == euler_solution(CurveParams(F(s), F(t)))


@pytest.mark.parametrize("s,t", PARAMS)
def test_pair_family_is_the_fiber_pair(s, t):
    x, y, z, w = euler_solution(CurveParams(F(s), F(t))).as_tuple()
    expected = canonicalize(pair_of(QuarticPoint(z, w, y, x)))
    assert canonicalize(QuarticPoint(*EULER_PAIR.evaluate(F(s), F(t)))) == expected


@pytest.mark.parametrize("s,t", PARAMS)
def test_double_families_come_from_tangent_doubling(s, t):
    p = CurveParams(F(s), F(t))
    lifted = {canonicalize(q) for _, q in fiber_solutions(tangent_double(euler_point(p), p), p)}
    assert canonicalize(QuarticPoint(*EULER_DOUBLE.evaluate(p.s, p.t))) in lifted
    assert canonicalize(QuarticPoint(*EULER_DOUBLE_PAIR.evaluate(p.s, p.t))) in lifted


def test_double_family_at_2_1():
    assert canonicalize(QuarticPoint(*EULER_DOUBLE.evaluate(F(2), F(1)))) == QuarticPoint.of(2903, 12231, 10203, 10381)
    assert canonicalize(QuarticPoint(*EULER_DOUBLE_PAIR.evaluate(F(2), F(1)))) == QuarticPoint.of(59, 158, 133, 134)

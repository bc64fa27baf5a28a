"""Known parametric solution families as quadruples of homogeneous forms in (s, t).

Each form is stored as a prefactor monomial times a homogeneous polynomial
given by its coefficients in descending powers of s.
"""

from __future__ import annotations

from typing import NamedTuple

from .exact.poly import BiPoly


class Family(NamedTuple):
    x: BiPoly
    y: BiPoly
    z: BiPoly
    w: BiPoly

    def evaluate(self, s, t):
        return tuple(f.eval(s, t) for f in self)

    def to_json(self) -> dict:
        return {name: f.to_json() for name, f in zip("xyzw", self)}

    @classmethod
    def from_json(cls, obj: dict) -> Family:
        return cls(*(BiPoly.from_json(obj[k]) for k in "xyzw"))


def homogeneous(coeffs_desc: list[int], sign: int = 1, s_factor: int = 0, t_factor: int = 0) -> BiPoly:
    """sign * s^s_factor * t^t_factor * sum c_k s^(deg-k) t^k over the given coefficients."""
    deg = len(coeffs_desc) - 1
    return BiPoly.from_terms(
        (sign * c, deg - k + s_factor, k + t_factor) for k, c in enumerate(coeffs_desc) if c
    )


EULER = Family(
    homogeneous([1, 0, 1, 0, -2, -3, 1], s_factor=1),
    homogeneous([1, 3, -2, 0, 1, 0, 1], t_factor=1),
    homogeneous([1, -3, -2, 0, 1, 0, 1], sign=-1, t_factor=1),
    homogeneous([1, 0, 1, 0, -2, 3, 1], s_factor=1),
)

# second fiber solution through each Euler point
EULER_PAIR = Family(
    homogeneous([1, 3, -15, 15, 6, -45, 82, -15, -123, 171, -159, 159, -98, 30, -12, 0, 3, 0, 1], sign=-1, t_factor=1),
    homogeneous([-1, 1, 3, 3, -21, 12, 44, -86, 93, -87, -3, 135, -142, 100, -72, 36, -12, 9, -1, 1]),
    homogeneous([1, -3, 3, 21, -60, 27, 58, -75, 57, -63, 63, -87, 100, -66, 36, -18, 9, 0, 1], t_factor=1),
    homogeneous([-1, 1, 3, 3, -21, 6, 44, -62, -15, 129, -165, 129, -88, 46, -18, 6, -12, 3, -1, 1]),
)

# solution attached to the tangent double of the Euler point
EULER_DOUBLE = Family(
    homogeneous([1, 1, 2, -4, -3, 3, 7, 4, -12, -6, 5, -1, 1, 1]),
    homogeneous([-1, 1, 1, 5, 6, -12, -4, 7, -3, -3, 4, 2, -1, 1]),
    homogeneous([1, 1, -1, 5, -6, -12, 4, 7, 3, -3, -4, 2, 1, 1], sign=-1),
    homogeneous([1, -1, 2, 4, -3, -3, 7, -4, -12, 6, 5, 1, 1, -1]),
)

EULER_DOUBLE_PAIR = Family(
    homogeneous([2, -6, -3, -3, -9, 27, 32, -33, -39, 27, 21, -3, 2, -6, -12, 0, 3, 0, 2], t_factor=1),
    homogeneous([2, 0, 3, 0, -12, 6, 2, 3, 21, -27, -39, 33, 32, -27, -9, 3, -3, 6, 2], sign=-1, s_factor=1),
    homogeneous([-2, 0, -3, 0, 12, 6, -2, 3, -21, -27, 39, 33, -32, -27, 9, 3, 3, 6, -2], s_factor=1),
    homogeneous([2, 6, -3, 3, -9, -27, 32, 33, -39, -27, 21, 3, 2, 6, -12, 0, 3, 0, 2], sign=-1, t_factor=1),
)

FAMILIES: dict[str, Family] = {
    "euler": EULER,
    "euler-pair": EULER_PAIR,
    "euler-double": EULER_DOUBLE,
    "euler-double-pair": EULER_DOUBLE_PAIR,
}
